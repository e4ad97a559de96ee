//! Signed digraphs and the edge-list text format.
//!
//! A [`SignedDigraph`] is immutable once built: construction goes through
//! [`DigraphBuilder`] (or the edge-list parser), which sorts arcs by
//! `(src, dst, label)`, merges duplicate `(src, dst, label)` insertions
//! (critical flags OR-ed, weights min-ed), and freezes adjacency lists.
//! Arc identifiers are indices into that sorted order, so iterating arcs by
//! id is deterministic and lexicographic. Parallel arcs with opposite labels
//! and self-loops are both allowed.
//!
//! The edge-list format is line oriented:
//!
//! ```text
//! # comment
//! RAS MEK + crit w=1
//! MEK ERK -
//! LONER            # bare name: declares an isolated node
//! ```
//!
//! Node indices are assigned by first appearance. A bare single-token line
//! declares a node without arcs; the writer emits one such line per node so
//! that saving and reloading reproduces the node order and isolated nodes.

use std::collections::HashMap;
use std::fmt;

use num::rational::Ratio;
use num::{One, Signed, Zero};

use crate::{Error, Result};

/// Dense node identifier (index into the graph's node table).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Dense arc identifier (index into the graph's sorted arc table).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcId(pub u32);

impl ArcId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ArcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Arc label: activation (`+1`) or inhibition (`-1`).
///
/// Labels compose multiplicatively along walks. The derived order puts
/// `Neg` before `Pos`, which fixes every label tie-break in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Neg,
    Pos,
}

impl Sign {
    /// Product of two labels.
    #[inline]
    pub fn mul(self, other: Sign) -> Sign {
        if self == other {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    #[inline]
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    /// 0 for `Pos`, 1 for `Neg`; used to address the doubled graph.
    #[inline]
    pub fn bit(self) -> usize {
        match self {
            Sign::Pos => 0,
            Sign::Neg => 1,
        }
    }

    #[inline]
    pub fn from_bit(bit: usize) -> Sign {
        if bit == 0 {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Pos => write!(f, "+"),
            Sign::Neg => write!(f, "-"),
        }
    }
}

/// Exact nonnegative arc weight.
///
/// Weights parse from decimal literals (`1`, `0.5`, `2.25`) and are stored
/// as reduced rationals, so all comparisons and sums are exact. The default
/// weight is `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Ratio<i64>);

impl Weight {
    pub fn one() -> Weight {
        Weight(Ratio::one())
    }

    pub fn zero() -> Weight {
        Weight(Ratio::zero())
    }

    pub fn from_int(v: u32) -> Weight {
        Weight(Ratio::from_integer(v as i64))
    }

    /// Build from a rational; rejects negative values.
    pub fn from_ratio(r: Ratio<i64>) -> Result<Weight> {
        if r.is_negative() {
            return Err(Error::Domain(format!("negative weight {r}")));
        }
        Ok(Weight(r))
    }

    pub fn ratio(self) -> Ratio<i64> {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    /// Parse a nonnegative decimal literal.
    pub fn parse_decimal(s: &str) -> Result<Weight> {
        let bad = || Error::Domain(format!("invalid weight literal {s:?}"));
        if s.is_empty() || s.starts_with('+') || s.starts_with('-') {
            return Err(bad());
        }
        let (int_part, frac_part) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        let digits_ok = |p: &str| p.chars().all(|c| c.is_ascii_digit());
        if !digits_ok(int_part) || !digits_ok(frac_part) || frac_part.len() > 15 {
            return Err(bad());
        }
        let int: i64 = if int_part.is_empty() {
            0
        } else {
            int_part.parse().map_err(|_| bad())?
        };
        let mut num = int;
        let mut den: i64 = 1;
        for c in frac_part.chars() {
            num = num
                .checked_mul(10)
                .and_then(|n| n.checked_add((c as u8 - b'0') as i64))
                .ok_or_else(bad)?;
            den = den.checked_mul(10).ok_or_else(bad)?;
        }
        Ok(Weight(Ratio::new(num, den)))
    }
}

impl Default for Weight {
    fn default() -> Self {
        Weight::one()
    }
}

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight(self.0 + rhs.0)
    }
}

impl std::iter::Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::zero(), |a, b| a + b)
    }
}

impl fmt::Display for Weight {
    /// Renders as a decimal when the reduced denominator is of the form
    /// `2^a * 5^b`, else as `numer/denom`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let numer = *self.0.numer();
        let mut den = *self.0.denom();
        if den == 1 {
            return write!(f, "{numer}");
        }
        let mut twos = 0u32;
        let mut fives = 0u32;
        while den % 2 == 0 {
            den /= 2;
            twos += 1;
        }
        while den % 5 == 0 {
            den /= 5;
            fives += 1;
        }
        if den != 1 {
            return write!(f, "{}/{}", numer, self.0.denom());
        }
        // Scale numerator so the denominator becomes 10^k.
        let k = twos.max(fives);
        let mut scaled = numer as i128;
        for _ in 0..(k - twos) {
            scaled *= 2;
        }
        for _ in 0..(k - fives) {
            scaled *= 5;
        }
        let pow10 = 10i128.pow(k);
        let frac = format!("{:0width$}", scaled % pow10, width = k as usize);
        write!(f, "{}.{}", scaled / pow10, frac)
    }
}

/// A labeled, weighted, optionally critical arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub src: NodeId,
    pub dst: NodeId,
    pub label: Sign,
    pub weight: Weight,
    pub critical: bool,
}

impl Arc {
    pub fn is_self_loop(&self) -> bool {
        self.src == self.dst
    }

    fn key(&self) -> (NodeId, NodeId, Sign) {
        (self.src, self.dst, self.label)
    }
}

/// Immutable signed digraph. See the module docs for construction rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedDigraph {
    names: Vec<String>,
    name_index: HashMap<String, NodeId>,
    arcs: Vec<Arc>,
    out: Vec<Vec<ArcId>>,
    inn: Vec<Vec<ArcId>>,
}

impl SignedDigraph {
    pub fn builder() -> DigraphBuilder {
        DigraphBuilder::new()
    }

    /// Internal constructor: sorts `arcs`, merges duplicates, builds
    /// adjacency. `tags` travel with the arcs through the sort; the tag of a
    /// merged duplicate group is the tag of its first member in input order.
    fn from_parts<T: Copy>(
        names: Vec<String>,
        name_index: HashMap<String, NodeId>,
        arcs: Vec<(Arc, T)>,
    ) -> (SignedDigraph, Vec<T>) {
        let n = names.len();
        let mut entries = arcs;
        // Stable sort keeps input order within a duplicate group.
        entries.sort_by_key(|(a, _)| a.key());
        let mut merged: Vec<(Arc, T)> = Vec::with_capacity(entries.len());
        for (arc, tag) in entries {
            debug_assert!(arc.src.index() < n && arc.dst.index() < n);
            match merged.last_mut() {
                Some((prev, _)) if prev.key() == arc.key() => {
                    prev.critical |= arc.critical;
                    prev.weight = prev.weight.min(arc.weight);
                }
                _ => merged.push((arc, tag)),
            }
        }
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        let mut tags = Vec::with_capacity(merged.len());
        let mut final_arcs = Vec::with_capacity(merged.len());
        for (i, (arc, tag)) in merged.into_iter().enumerate() {
            let id = ArcId(i as u32);
            out[arc.src.index()].push(id);
            inn[arc.dst.index()].push(id);
            final_arcs.push(arc);
            tags.push(tag);
        }
        // Arc order is (src, dst, label), so `out` lists are already sorted
        // by (dst, label) and `inn` lists by (src, label).
        let g = SignedDigraph {
            names,
            name_index,
            arcs: final_arcs,
            out,
            inn,
        };
        (g, tags)
    }

    pub fn node_count(&self) -> usize {
        self.names.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        (0..self.names.len() as u32).map(NodeId)
    }

    pub fn arc_ids(&self) -> impl Iterator<Item = ArcId> {
        (0..self.arcs.len() as u32).map(ArcId)
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    #[inline]
    pub fn arc(&self, id: ArcId) -> &Arc {
        &self.arcs[id.index()]
    }

    pub fn name(&self, node: NodeId) -> &str {
        &self.names[node.index()]
    }

    pub fn node_by_name(&self, name: &str) -> Option<NodeId> {
        self.name_index.get(name).copied()
    }

    /// Arc ids leaving `node`, sorted by `(dst, label)`.
    #[inline]
    pub fn out_arcs(&self, node: NodeId) -> &[ArcId] {
        &self.out[node.index()]
    }

    /// Arc ids entering `node`, sorted by `(src, label)`.
    #[inline]
    pub fn in_arcs(&self, node: NodeId) -> &[ArcId] {
        &self.inn[node.index()]
    }

    pub fn find_arc(&self, src: NodeId, dst: NodeId, label: Sign) -> Option<ArcId> {
        self.arcs
            .binary_search_by_key(&(src, dst, label), |a| a.key())
            .ok()
            .map(|i| ArcId(i as u32))
    }

    /// Set of critical arcs.
    pub fn critical_set(&self) -> ArcSet {
        let mut s = ArcSet::empty(self.arc_count());
        for id in self.arc_ids() {
            if self.arc(id).critical {
                s.insert(id);
            }
        }
        s
    }

    /// The full arc set.
    pub fn all_arcs(&self) -> ArcSet {
        ArcSet::full(self.arc_count())
    }

    /// Same nodes, every arc reversed. The second value maps each arc id of
    /// the reversed graph back to the original arc id.
    pub fn reversed(&self) -> (SignedDigraph, Vec<ArcId>) {
        let arcs = self
            .arc_ids()
            .map(|id| {
                let a = self.arc(id);
                (
                    Arc {
                        src: a.dst,
                        dst: a.src,
                        ..*a
                    },
                    id,
                )
            })
            .collect();
        SignedDigraph::from_parts(self.names.clone(), self.name_index.clone(), arcs)
    }

    /// Subgraph induced by `nodes` (must be sorted and deduplicated),
    /// including self-loops. Returns the subgraph and a map from its arc ids
    /// to arc ids of `self`.
    pub fn induced_subgraph(&self, nodes: &[NodeId]) -> (SignedDigraph, Vec<ArcId>) {
        debug_assert!(nodes.windows(2).all(|w| w[0] < w[1]));
        let mut local = vec![u32::MAX; self.node_count()];
        let mut names = Vec::with_capacity(nodes.len());
        let mut name_index = HashMap::new();
        for (i, &v) in nodes.iter().enumerate() {
            local[v.index()] = i as u32;
            names.push(self.names[v.index()].clone());
            name_index.insert(self.names[v.index()].clone(), NodeId(i as u32));
        }
        let mut arcs = Vec::new();
        for id in self.arc_ids() {
            let a = self.arc(id);
            let (s, d) = (local[a.src.index()], local[a.dst.index()]);
            if s != u32::MAX && d != u32::MAX {
                arcs.push((
                    Arc {
                        src: NodeId(s),
                        dst: NodeId(d),
                        ..*a
                    },
                    id,
                ));
            }
        }
        SignedDigraph::from_parts(names, name_index, arcs)
    }

    /// Graph with the same nodes restricted to the arcs in `kept`. Returns
    /// the new graph and a map from its arc ids back to `self`'s arc ids.
    pub fn restrict_arcs(&self, kept: &ArcSet) -> Result<(SignedDigraph, Vec<ArcId>)> {
        if kept.universe() != self.arc_count() {
            return Err(Error::ArcNotInGraph);
        }
        let arcs = kept.iter().map(|id| (*self.arc(id), id)).collect();
        Ok(SignedDigraph::from_parts(
            self.names.clone(),
            self.name_index.clone(),
            arcs,
        ))
    }

    /// Drops the nodes where `keep` is false together with their incident
    /// arcs. Returns the new graph, a per-old-node map to new ids, and a map
    /// from new arc ids to old arc ids.
    pub fn retain_nodes(&self, keep: &[bool]) -> (SignedDigraph, Vec<Option<NodeId>>, Vec<ArcId>) {
        assert_eq!(keep.len(), self.node_count());
        let mut node_map = vec![None; self.node_count()];
        let mut names = Vec::new();
        let mut name_index = HashMap::new();
        for v in self.nodes() {
            if keep[v.index()] {
                let id = NodeId(names.len() as u32);
                node_map[v.index()] = Some(id);
                names.push(self.names[v.index()].clone());
                name_index.insert(self.names[v.index()].clone(), id);
            }
        }
        let mut arcs = Vec::new();
        for id in self.arc_ids() {
            let a = self.arc(id);
            if let (Some(s), Some(d)) = (node_map[a.src.index()], node_map[a.dst.index()]) {
                arcs.push((Arc { src: s, dst: d, ..*a }, id));
            }
        }
        let (g, tags) = SignedDigraph::from_parts(names, name_index, arcs);
        (g, node_map, tags)
    }

    /// Parse the edge-list text format. See the module docs.
    pub fn parse_edge_list(text: &str) -> Result<SignedDigraph> {
        let mut b = DigraphBuilder::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let toks: Vec<&str> = content.split_whitespace().collect();
            if toks.len() == 1 {
                b.node(toks[0]);
                continue;
            }
            if toks.len() < 3 || toks.len() > 5 {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected `src dst sign [crit] [w=..]`, got {} fields", toks.len()),
                });
            }
            let label = match toks[2] {
                "+" => Sign::Pos,
                "-" => Sign::Neg,
                other => {
                    return Err(Error::Parse {
                        line,
                        msg: format!("sign must be `+` or `-`, got {other:?}"),
                    })
                }
            };
            let mut critical = false;
            let mut weight = Weight::one();
            let mut seen_crit = false;
            let mut seen_w = false;
            for tok in &toks[3..] {
                if *tok == "crit" {
                    if seen_crit {
                        return Err(Error::Parse {
                            line,
                            msg: "duplicate `crit` flag".into(),
                        });
                    }
                    seen_crit = true;
                    critical = true;
                } else if let Some(lit) = tok.strip_prefix("w=") {
                    if seen_w {
                        return Err(Error::Parse {
                            line,
                            msg: "duplicate weight field".into(),
                        });
                    }
                    seen_w = true;
                    weight = Weight::parse_decimal(lit).map_err(|e| Error::Parse {
                        line,
                        msg: e.to_string(),
                    })?;
                } else {
                    return Err(Error::Parse {
                        line,
                        msg: format!("unexpected field {tok:?}"),
                    });
                }
            }
            let src = b.node(toks[0]);
            let dst = b.node(toks[1]);
            b.add_arc_full(src, dst, label, weight, critical);
        }
        Ok(b.build())
    }

    /// Serialize to the edge-list format. Emits one bare line per node (in
    /// index order) followed by one line per arc (in arc-id order), so a
    /// reload reproduces node order, isolated nodes, and all arc attributes.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for v in self.nodes() {
            s.push_str(self.name(v));
            s.push('\n');
        }
        for a in &self.arcs {
            s.push_str(self.name(a.src));
            s.push(' ');
            s.push_str(self.name(a.dst));
            s.push(' ');
            s.push_str(&a.label.to_string());
            if a.critical {
                s.push_str(" crit");
            }
            if a.weight != Weight::one() {
                s.push_str(&format!(" w={}", a.weight));
            }
            s.push('\n');
        }
        s
    }
}

/// Builder for [`SignedDigraph`]. Nodes are created explicitly or fetched
/// by name; arcs may be added in any order.
#[derive(Debug, Default)]
pub struct DigraphBuilder {
    names: Vec<String>,
    name_index: HashMap<String, NodeId>,
    arcs: Vec<Arc>,
}

impl DigraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Get or create the node with the given name.
    pub fn node(&mut self, name: &str) -> NodeId {
        if let Some(&id) = self.name_index.get(name) {
            return id;
        }
        let id = NodeId(self.names.len() as u32);
        self.names.push(name.to_string());
        self.name_index.insert(name.to_string(), id);
        id
    }

    /// Create an anonymous node; it receives the first free `n<k>` name.
    pub fn add_node(&mut self) -> NodeId {
        let mut k = self.names.len();
        loop {
            let candidate = format!("n{k}");
            if !self.name_index.contains_key(&candidate) {
                return self.node(&candidate);
            }
            k += 1;
        }
    }

    pub fn node_count(&self) -> usize {
        self.names.len()
    }

    /// Add a non-critical unit-weight arc.
    pub fn add_arc(&mut self, src: NodeId, dst: NodeId, label: Sign) -> &mut Self {
        self.add_arc_full(src, dst, label, Weight::one(), false)
    }

    pub fn add_arc_full(
        &mut self,
        src: NodeId,
        dst: NodeId,
        label: Sign,
        weight: Weight,
        critical: bool,
    ) -> &mut Self {
        assert!(
            src.index() < self.names.len() && dst.index() < self.names.len(),
            "arc endpoint not created via this builder"
        );
        self.arcs.push(Arc {
            src,
            dst,
            label,
            weight,
            critical,
        });
        self
    }

    pub fn build(self) -> SignedDigraph {
        let arcs = self.arcs.into_iter().map(|a| (a, ())).collect();
        SignedDigraph::from_parts(self.names, self.name_index, arcs).0
    }
}

/// A subset of a specific graph's arcs, stored as a bitset over arc ids.
///
/// A set remembers the arc-count (`universe`) of the graph it was built
/// for; operations that pair a set with a graph check that they match.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArcSet {
    bits: Vec<u64>,
    universe: usize,
    len: usize,
}

impl ArcSet {
    pub fn empty(universe: usize) -> ArcSet {
        ArcSet {
            bits: vec![0; universe.div_ceil(64)],
            universe,
            len: 0,
        }
    }

    pub fn full(universe: usize) -> ArcSet {
        let mut s = ArcSet::empty(universe);
        for i in 0..universe {
            s.insert(ArcId(i as u32));
        }
        s
    }

    pub fn from_ids<I: IntoIterator<Item = ArcId>>(universe: usize, ids: I) -> ArcSet {
        let mut s = ArcSet::empty(universe);
        for id in ids {
            s.insert(id);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Insert; returns true if the arc was not present.
    pub fn insert(&mut self, id: ArcId) -> bool {
        assert!(id.index() < self.universe, "arc id out of range");
        let (w, b) = (id.index() / 64, id.index() % 64);
        let newly = self.bits[w] & (1 << b) == 0;
        if newly {
            self.bits[w] |= 1 << b;
            self.len += 1;
        }
        newly
    }

    /// Remove; returns true if the arc was present.
    pub fn remove(&mut self, id: ArcId) -> bool {
        assert!(id.index() < self.universe, "arc id out of range");
        let (w, b) = (id.index() / 64, id.index() % 64);
        let present = self.bits[w] & (1 << b) != 0;
        if present {
            self.bits[w] &= !(1 << b);
            self.len -= 1;
        }
        present
    }

    #[inline]
    pub fn contains(&self, id: ArcId) -> bool {
        let i = id.index();
        i < self.universe && self.bits[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn union_with(&mut self, other: &ArcSet) {
        assert_eq!(self.universe, other.universe);
        for id in other.iter() {
            self.insert(id);
        }
    }

    pub fn is_subset_of(&self, other: &ArcSet) -> bool {
        self.universe == other.universe
            && self
                .bits
                .iter()
                .zip(&other.bits)
                .all(|(a, b)| a & !b == 0)
    }

    /// Arcs of the universe not in this set.
    pub fn complement(&self) -> ArcSet {
        let mut s = ArcSet::empty(self.universe);
        for i in 0..self.universe {
            let id = ArcId(i as u32);
            if !self.contains(id) {
                s.insert(id);
            }
        }
        s
    }

    /// Ascending arc ids.
    pub fn iter(&self) -> impl Iterator<Item = ArcId> + '_ {
        self.bits.iter().enumerate().flat_map(move |(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros();
                    bits &= bits - 1;
                    Some(ArcId((w * 64) as u32 + b))
                }
            })
        })
    }
}

impl fmt::Debug for ArcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|a| a.0)).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_parses_and_displays_decimals() {
        for (lit, shown) in [("1", "1"), ("0.5", "0.5"), ("2.25", "2.25"), ("0.50", "0.5")] {
            let w = Weight::parse_decimal(lit).unwrap();
            assert_eq!(w.to_string(), shown);
        }
        assert!(Weight::parse_decimal("-1").is_err());
        assert!(Weight::parse_decimal("1.2.3").is_err());
        assert!(Weight::parse_decimal("").is_err());
        assert!(Weight::parse_decimal("x").is_err());
    }

    #[test]
    fn weight_exact_ordering() {
        let a = Weight::parse_decimal("0.1").unwrap();
        let b = Weight::parse_decimal("0.3").unwrap();
        let c = Weight::parse_decimal("0.2").unwrap();
        assert_eq!(a + c, b);
        assert!(a < c && c < b);
    }

    #[test]
    fn duplicate_insertions_merge() {
        let mut b = SignedDigraph::builder();
        let x = b.node("x");
        let y = b.node("y");
        b.add_arc_full(x, y, Sign::Pos, Weight::from_int(3), false);
        b.add_arc_full(x, y, Sign::Pos, Weight::from_int(2), true);
        b.add_arc_full(x, y, Sign::Neg, Weight::one(), false);
        let g = b.build();
        assert_eq!(g.arc_count(), 2);
        let id = g.find_arc(x, y, Sign::Pos).unwrap();
        assert!(g.arc(id).critical);
        assert_eq!(g.arc(id).weight, Weight::from_int(2));
    }

    #[test]
    fn arcs_sorted_and_adjacency_consistent() {
        let mut b = SignedDigraph::builder();
        let n: Vec<_> = (0..4).map(|_| b.add_node()).collect();
        b.add_arc(n[2], n[1], Sign::Pos);
        b.add_arc(n[0], n[3], Sign::Neg);
        b.add_arc(n[0], n[1], Sign::Pos);
        b.add_arc(n[0], n[1], Sign::Neg);
        let g = b.build();
        let keys: Vec<_> = g.arcs().iter().map(|a| (a.src.0, a.dst.0, a.label)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(g.out_arcs(n[0]).len(), 3);
        assert_eq!(g.in_arcs(n[1]).len(), 3);
    }

    #[test]
    fn parse_rejects_malformed_lines() {
        for (text, line) in [
            ("a b\n", 1),
            ("a b + w=zz\n", 1),
            ("a b *\n", 1),
            ("a b + crit crit\n", 1),
            ("a b + w=1 w=2\n", 1),
            ("ok ok2 +\na b + crit w=1 extra\n", 2),
        ] {
            match SignedDigraph::parse_edge_list(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "input {text:?}"),
                other => panic!("expected parse error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn parse_assigns_indices_by_first_appearance() {
        let g = SignedDigraph::parse_edge_list("RAS MEK + crit w=1\nMEK ERK -\n").unwrap();
        assert_eq!(g.name(NodeId(0)), "RAS");
        assert_eq!(g.name(NodeId(1)), "MEK");
        assert_eq!(g.name(NodeId(2)), "ERK");
        let id = g
            .find_arc(NodeId(0), NodeId(1), Sign::Pos)
            .expect("RAS->MEK present");
        assert!(g.arc(id).critical);
    }

    #[test]
    fn edge_list_round_trip_preserves_graph() {
        let text = "a b + crit w=0.5\nb c -\nc a +\nlonely\n";
        let g1 = SignedDigraph::parse_edge_list(text).unwrap();
        let g2 = SignedDigraph::parse_edge_list(&g1.to_edge_list()).unwrap();
        assert_eq!(g1, g2);
        assert_eq!(g2.node_by_name("lonely"), Some(NodeId(3)));
    }

    #[test]
    fn reversed_maps_arcs_back() {
        let g = SignedDigraph::parse_edge_list("a b +\nb c -\n").unwrap();
        let (r, back) = g.reversed();
        assert_eq!(r.arc_count(), 2);
        for id in r.arc_ids() {
            let ra = r.arc(id);
            let oa = g.arc(back[id.index()]);
            assert_eq!((ra.src, ra.dst, ra.label), (oa.dst, oa.src, oa.label));
        }
    }

    #[test]
    fn arc_set_basics() {
        let mut s = ArcSet::empty(130);
        assert!(s.insert(ArcId(0)));
        assert!(s.insert(ArcId(129)));
        assert!(!s.insert(ArcId(0)));
        assert_eq!(s.len(), 2);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![ArcId(0), ArcId(129)]);
        assert!(s.remove(ArcId(0)));
        assert!(!s.remove(ArcId(0)));
        assert_eq!(s.complement().len(), 129);
        assert!(s.is_subset_of(&ArcSet::full(130)));
    }
}
