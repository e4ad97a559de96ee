//! Approximation algorithms for the reduction problem family.
//!
//! All of them produce a [`ReductionResult`] whose kept set preserves the
//! (blind or parity) closure and contains every critical arc:
//!
//! * [`fj_weighted_min_ed`] - weighted minimization on a strongly
//!   connected graph via one minimum in- plus one minimum
//!   out-arborescence (factor 2).
//! * [`critical_min_ed_2approx`] - unweighted minimization around a
//!   critical core, by zero-weighting critical arcs in the two
//!   arborescence passes (factor 2 on the non-critical count).
//! * [`kry_contract`] - cycle-contraction scheme: repeatedly contract
//!   long cycles (phases `c`, `c-1`, ..., 3), then span the bidirected
//!   residual; factor about 1.617 for the default `c = 12`.
//! * [`critical_max_ed_2approx`] - deletion maximization: keep the
//!   provably necessary arcs plus two arborescences over the quotient;
//!   achieves at least half the optimal deletion count.
//! * [`min_btr`] - parity-preserving reduction of signed graphs: per
//!   component a blind reduction plus at most one parity-restoring arc,
//!   recombined across the condensation.
//!
//! [`solve`] dispatches on [`Algorithm`] and transparently handles inputs
//! that are not strongly connected by solving per component.

use crate::arborescence::{min_in_with_weights, min_out_with_weights};
use crate::closure::{classify_parity, closure_equal, ParityClass, ReachEngine};
use crate::condense::is_strongly_connected;
use crate::graph::{ArcId, ArcSet, NodeId, Sign, SignedDigraph, Weight};
use crate::lp::matching_lower_bound;
use crate::oracle;
use crate::reduce::{
    decompose_impl, parity_augment, verify_repair, ReductionResult, SccSolution,
};
use crate::{Error, Result};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

/// Tuning knobs for [`solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOptions {
    /// Honor arc labels (parities) when judging closure preservation.
    /// Only consulted by the algorithms that support both modes
    /// (`dag`, `oracle`, `oracle-weighted`); `btr` is always
    /// label-aware and the rest are label-blind.
    pub label_aware: bool,
    /// Longest cycle length the contraction scheme hunts for first.
    pub kry_c: u32,
    /// Step budget each heuristic long-cycle round gets before erring.
    pub cycle_budget: usize,
    /// Run the repair pass on the solver output. When disabled the raw
    /// output is returned and `verified` reports an honest re-check.
    pub repair: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            label_aware: false,
            kry_c: 12,
            cycle_budget: 1_000_000,
            repair: true,
        }
    }
}

/// The algorithms [`solve`] can dispatch to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Dag,
    Fj,
    Critical2,
    Kry,
    Maxed2,
    Btr,
    Oracle,
    OracleWeighted,
}

impl Algorithm {
    pub const ALL: [Algorithm; 8] = [
        Algorithm::Dag,
        Algorithm::Fj,
        Algorithm::Critical2,
        Algorithm::Kry,
        Algorithm::Maxed2,
        Algorithm::Btr,
        Algorithm::Oracle,
        Algorithm::OracleWeighted,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Dag => "dag",
            Algorithm::Fj => "fj",
            Algorithm::Critical2 => "critical2",
            Algorithm::Kry => "kry",
            Algorithm::Maxed2 => "maxed2",
            Algorithm::Btr => "btr",
            Algorithm::Oracle => "oracle",
            Algorithm::OracleWeighted => "oracle-weighted",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Algorithm> {
        Algorithm::ALL
            .iter()
            .copied()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown algorithm `{s}`")))
    }
}

fn require_sc(g: &SignedDigraph) -> Result<()> {
    if is_strongly_connected(g) {
        Ok(())
    } else {
        Err(Error::NotStronglyConnected)
    }
}

/// Union in the criticals, optionally repair, and package the result.
fn finish(
    g: &SignedDigraph,
    mut kept: ArcSet,
    algorithm: &'static str,
    label_aware: bool,
    repair: bool,
    lower_bound: Option<usize>,
    augmentations: Vec<ArcId>,
) -> Result<ReductionResult> {
    kept.union_with(&g.critical_set());
    let (kept, verified) = if repair {
        (verify_repair(g, &kept, label_aware)?, true)
    } else {
        let ok = closure_equal(g, &kept, label_aware)?;
        (kept, ok)
    };
    let augmentations = augmentations
        .into_iter()
        .filter(|a| kept.contains(*a))
        .collect();
    Ok(ReductionResult::from_kept(
        g,
        kept,
        algorithm,
        augmentations,
        verified,
        lower_bound,
    ))
}

fn bound_for(g: &SignedDigraph) -> Option<usize> {
    if g.node_count() >= 2 {
        Some(matching_lower_bound(g))
    } else {
        None
    }
}

fn unit_or_zero_weights(g: &SignedDigraph, zero: &ArcSet) -> Vec<Weight> {
    g.arc_ids()
        .map(|id| {
            if zero.contains(id) {
                Weight::zero()
            } else {
                Weight::one()
            }
        })
        .collect()
}

fn fj_impl(g: &SignedDigraph, repair: bool) -> Result<ReductionResult> {
    require_sc(g)?;
    if g.node_count() == 0 {
        return finish(g, ArcSet::empty(0), "fj", false, repair, None, Vec::new());
    }
    let root = NodeId(0);
    let weights: Vec<Weight> = g.arcs().iter().map(|a| a.weight).collect();
    let a_in = min_in_with_weights(g, root, &weights)?;
    let a_out = min_out_with_weights(g, root, &weights)?;
    let mut kept = ArcSet::empty(g.arc_count());
    for id in a_in.arcs.iter().chain(a_out.arcs.iter()) {
        kept.insert(*id);
    }
    finish(g, kept, "fj", false, repair, bound_for(g), Vec::new())
}

/// Weighted minimization on a strongly connected graph: the union of a
/// minimum in- and a minimum out-arborescence at a fixed root. Each tree
/// weighs at most as much as any valid solution (which must span both
/// ways), so the union is within factor 2 of the weighted optimum; the
/// repair pass only removes arcs.
pub fn fj_weighted_min_ed(g: &SignedDigraph) -> Result<ReductionResult> {
    fj_impl(g, true)
}

fn critical2_impl(g: &SignedDigraph, repair: bool) -> Result<ReductionResult> {
    require_sc(g)?;
    if g.node_count() == 0 {
        return finish(
            g,
            ArcSet::empty(0),
            "critical2",
            false,
            repair,
            None,
            Vec::new(),
        );
    }
    let root = NodeId(0);
    let d = g.critical_set();
    let w1 = unit_or_zero_weights(g, &d);
    let a1 = min_in_with_weights(g, root, &w1)?;
    let mut zero2 = d.clone();
    for &id in &a1.arcs {
        zero2.insert(id);
    }
    let w2 = unit_or_zero_weights(g, &zero2);
    let a2 = min_out_with_weights(g, root, &w2)?;
    let mut kept = d;
    for id in a1.arcs.iter().chain(a2.arcs.iter()) {
        kept.insert(*id);
    }
    finish(g, kept, "critical2", false, repair, bound_for(g), Vec::new())
}

/// Unweighted minimization that must keep the critical arcs: critical
/// arcs cost nothing in a minimum in-arborescence pass, then everything
/// already kept costs nothing in the out-arborescence pass. The
/// non-critical arc count is at most twice that of any valid solution.
pub fn critical_min_ed_2approx(g: &SignedDigraph) -> Result<ReductionResult> {
    critical2_impl(g, true)
}

/// Contracted multigraph state for the cycle-contraction scheme.
struct Contracted {
    k: usize,
    /// (super-src, super-dst, original arc); never intra-super.
    arcs: Vec<(usize, usize, ArcId)>,
    /// adjacency as indices into `arcs`, per super node, ascending arc id.
    adj: Vec<Vec<usize>>,
}

impl Contracted {
    fn new(g: &SignedDigraph) -> Contracted {
        let arcs: Vec<(usize, usize, ArcId)> = g
            .arc_ids()
            .filter(|&id| !g.arc(id).is_self_loop())
            .map(|id| {
                let a = g.arc(id);
                (a.src.index(), a.dst.index(), id)
            })
            .collect();
        let mut c = Contracted {
            k: g.node_count(),
            arcs,
            adj: Vec::new(),
        };
        c.rebuild_adj();
        c
    }

    fn rebuild_adj(&mut self) {
        self.adj = vec![Vec::new(); self.k];
        for (i, &(s, _, _)) in self.arcs.iter().enumerate() {
            self.adj[s].push(i);
        }
    }

    /// Merge the given super nodes into one; drops arcs that become
    /// internal and renumbers the rest compactly.
    fn contract(&mut self, merged: &[usize]) {
        let mut comp: Vec<usize> = (0..self.k).collect();
        let rep = *merged.iter().min().unwrap();
        for &v in merged {
            comp[v] = rep;
        }
        let mut new_id = vec![usize::MAX; self.k];
        let mut next = 0;
        for v in 0..self.k {
            if comp[v] == v {
                new_id[v] = next;
                next += 1;
            }
        }
        self.arcs.retain_mut(|(s, d, _)| {
            let (ns, nd) = (new_id[comp[*s]], new_id[comp[*d]]);
            *s = ns;
            *d = nd;
            ns != nd
        });
        self.k = next;
        self.rebuild_adj();
    }

    /// Depth-first hunt for a simple cycle of at least `min_len` arcs.
    /// Each super node is expanded once per start, so long cycles can be
    /// missed; that only costs solution quality, never validity. Returns
    /// the arc indices of a found cycle.
    fn find_long_cycle(&self, min_len: usize, budget: &mut usize) -> Result<Option<Vec<usize>>> {
        for start in 0..self.k {
            let mut visited = vec![false; self.k];
            let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
            let mut path_arcs: Vec<usize> = Vec::new();
            visited[start] = true;
            loop {
                let Some(&(v, ptr)) = stack.last() else { break };
                if ptr >= self.adj[v].len() {
                    stack.pop();
                    path_arcs.pop();
                    continue;
                }
                stack.last_mut().unwrap().1 += 1;
                let ai = self.adj[v][ptr];
                if *budget == 0 {
                    return Err(Error::CycleSearchBudgetExceeded);
                }
                *budget -= 1;
                let (_, w, _) = self.arcs[ai];
                if w == start && stack.len() >= min_len {
                    path_arcs.push(ai);
                    return Ok(Some(path_arcs));
                }
                if !visited[w] {
                    visited[w] = true;
                    stack.push((w, 0));
                    path_arcs.push(ai);
                }
            }
        }
        Ok(None)
    }

    /// Exact search for a simple cycle of at least 3 arcs: arc `(u, v)`
    /// lies on one iff `u` is reachable from `v` without using a direct
    /// `v -> u` arc (a shortest such path has length >= 2 and is simple).
    fn find_triangle_or_longer(&self) -> Option<Vec<usize>> {
        for (i, &(u, v, _)) in self.arcs.iter().enumerate() {
            let mut parent: Vec<Option<usize>> = vec![None; self.k];
            let mut seen = vec![false; self.k];
            seen[v] = true;
            let mut queue = vec![v];
            let mut head = 0;
            'bfs: while head < queue.len() {
                let x = queue[head];
                head += 1;
                for &ai in &self.adj[x] {
                    let (s, d, _) = self.arcs[ai];
                    if s == v && d == u {
                        continue; // would close a 2-cycle
                    }
                    if !seen[d] {
                        seen[d] = true;
                        parent[d] = Some(ai);
                        if d == u {
                            break 'bfs;
                        }
                        queue.push(d);
                    }
                }
            }
            if seen[u] && u != v {
                let mut cyc = vec![i];
                let mut x = u;
                while x != v {
                    let ai = parent[x].unwrap();
                    cyc.push(ai);
                    x = self.arcs[ai].0;
                }
                return Some(cyc);
            }
        }
        None
    }
}

fn kry_impl(g: &SignedDigraph, c: u32, budget: usize, repair: bool) -> Result<ReductionResult> {
    require_sc(g)?;
    if g.node_count() == 0 {
        return finish(g, ArcSet::empty(0), "kry", false, repair, None, Vec::new());
    }
    let c = c.max(3) as usize;
    let mut state = Contracted::new(g);
    let mut kept = ArcSet::empty(g.arc_count());
    for i in (3..=c).rev() {
        let mut round_budget = budget;
        while state.k >= i {
            let found = if i >= 4 {
                state.find_long_cycle(i, &mut round_budget)?
            } else {
                state.find_triangle_or_longer()
            };
            let Some(cycle) = found else { break };
            let mut nodes: Vec<usize> = Vec::new();
            for &ai in &cycle {
                let (s, _, orig) = state.arcs[ai];
                kept.insert(orig);
                nodes.push(s);
            }
            state.contract(&nodes);
        }
    }
    // Residual: strongly connected without simple cycles over 2 arcs, so
    // every remaining arc has its reverse and the super nodes form a tree.
    // Span it with one arc per direction per tree edge.
    let mut best: HashMap<(usize, usize), ArcId> = HashMap::new();
    for &(s, d, id) in &state.arcs {
        let e = best.entry((s, d)).or_insert(id);
        if id < *e {
            *e = id;
        }
    }
    for (_, id) in best {
        kept.insert(id);
    }
    finish(g, kept, "kry", false, repair, bound_for(g), Vec::new())
}

/// Cycle-contraction minimization: hunt for cycles of length `c`, then
/// `c - 1`, ..., down to an exact length-3 phase, keeping and contracting
/// each found cycle; finally span the remaining bidirected tree both
/// ways. Never worse than factor 2; about 1.617 with exhaustive searches
/// at `c = 12`.
pub fn kry_contract(g: &SignedDigraph, c: u32) -> Result<ReductionResult> {
    kry_impl(g, c, SolveOptions::default().cycle_budget, true)
}

/// Per ordered super-node pair, collapse the parallel candidates into the
/// one a minimum arborescence could pick: weight 0 if the pair contains a
/// zero-set arc, else 1; representative = the smallest eligible arc id.
fn quotient_graph(
    g: &SignedDigraph,
    comp: &[u32],
    k: usize,
    zero: &ArcSet,
) -> (SignedDigraph, Vec<Option<ArcId>>) {
    // Per pair: (paid, id) minimized, so free (zero-set) arcs dominate and
    // ties go to the smallest arc id.
    let mut pairs: HashMap<(u32, u32), (bool, ArcId)> = HashMap::new();
    for id in g.arc_ids() {
        let a = g.arc(id);
        let key = (comp[a.src.index()], comp[a.dst.index()]);
        if key.0 == key.1 {
            continue;
        }
        let cand = (!zero.contains(id), id);
        let entry = pairs.entry(key).or_insert(cand);
        if cand < *entry {
            *entry = cand;
        }
    }
    let mut b = SignedDigraph::builder();
    for i in 0..k {
        b.node(&format!("q{i}"));
    }
    let mut reps: Vec<((u32, u32), ArcId)> = Vec::new();
    for (&(s, d), &(paid, id)) in &pairs {
        let w = if paid { Weight::one() } else { Weight::zero() };
        b.add_arc_full(NodeId(s), NodeId(d), Sign::Pos, w, false);
        reps.push(((s, d), id));
    }
    let q = b.build();
    let mut rep_of = vec![None; q.arc_count()];
    for ((s, d), id) in reps {
        let qa = q.find_arc(NodeId(s), NodeId(d), Sign::Pos).unwrap();
        rep_of[qa.index()] = Some(id);
    }
    (q, rep_of)
}

fn maxed2_impl(g: &SignedDigraph, repair: bool) -> Result<ReductionResult> {
    require_sc(g)?;
    if g.node_count() == 0 {
        return finish(g, ArcSet::empty(0), "maxed2", false, repair, None, Vec::new());
    }
    // Necessary arcs: critical, or sole realizer of their own endpoints.
    let mut eng = ReachEngine::new(g);
    let mut f = g.critical_set();
    let mut mask = g.all_arcs();
    for id in g.arc_ids() {
        if f.contains(id) {
            continue;
        }
        let a = g.arc(id);
        if a.is_self_loop() {
            continue; // trivially realized, never necessary
        }
        mask.remove(id);
        if !eng.realizes(&mask, a.src, a.dst, None) {
            f.insert(id);
        }
        mask.insert(id);
    }

    let (fg, _) = g.restrict_arcs(&f).expect("critical set is in range");
    let cond = crate::condense::scc_condense(&fg);
    let k = cond.component_count();
    let mut kept = f.clone();
    if k > 1 {
        // Component ids are topological, so component 0 has no incoming
        // necessary arc; root both arborescences there.
        let comp: Vec<u32> = g.nodes().map(|v| cond.component_of(v)).collect();
        let root = NodeId(0);
        let (q1, reps1) = quotient_graph(g, &comp, k, &f);
        let w1: Vec<Weight> = q1.arcs().iter().map(|a| a.weight).collect();
        let out = min_out_with_weights(&q1, root, &w1)?;
        let mut zero2 = f.clone();
        for &qa in &out.arcs {
            zero2.insert(reps1[qa.index()].unwrap());
        }
        let (q2, reps2) = quotient_graph(g, &comp, k, &zero2);
        let w2: Vec<Weight> = q2.arcs().iter().map(|a| a.weight).collect();
        let inn = min_in_with_weights(&q2, root, &w2)?;
        for &qa in &out.arcs {
            kept.insert(reps1[qa.index()].unwrap());
        }
        for &qa in &inn.arcs {
            kept.insert(reps2[qa.index()].unwrap());
        }
    }
    finish(g, kept, "maxed2", false, repair, bound_for(g), Vec::new())
}

/// Deletion maximization with a critical core: keep the arcs no valid
/// solution can drop (critical arcs and sole realizers), then make the
/// quotient of that necessary skeleton strongly connected again with an
/// out- plus an in-arborescence that reuse necessary arcs for free. The
/// number of deleted arcs is at least half the optimum.
pub fn critical_max_ed_2approx(g: &SignedDigraph) -> Result<ReductionResult> {
    maxed2_impl(g, true)
}

fn btr_impl(g: &SignedDigraph, repair: bool) -> Result<ReductionResult> {
    let mut res = decompose_impl(g, "btr", true, repair, |sub| {
        let blind = critical2_impl(sub, true)?;
        match classify_parity(sub)? {
            ParityClass::Single => Ok(SccSolution::plain(blind.kept)),
            ParityClass::Double { .. } => {
                let (kept, added) = parity_augment(sub, &blind.kept)?;
                Ok(SccSolution {
                    kept,
                    augmentation: added,
                })
            }
        }
    })?;
    if g.node_count() >= 2 && is_strongly_connected(g) {
        res.stats.lower_bound = Some(matching_lower_bound(g));
    }
    Ok(res)
}

/// Parity-preserving reduction of a signed graph (any shape): inside each
/// strongly connected component a label-blind reduction is computed and,
/// if the component carries both parities, upgraded with one
/// parity-restoring arc; the condensation is then reduced label-aware and
/// a final verify/repair pass settles cross-component parity effects.
pub fn min_btr(g: &SignedDigraph) -> Result<ReductionResult> {
    btr_impl(g, true)
}

/// The smallest label-aware reduction the heuristic portfolio finds:
/// [`min_btr`], plus the cycle-contraction scheme with its kept set
/// re-checked and repaired label-aware. The two attack the problem from
/// different angles (arborescence unions versus long-cycle reuse), so
/// whichever wins, the other bounds it. Ties keep the `min_btr` answer,
/// and a contraction candidate that errors (for example by blowing its
/// cycle budget) is simply not used.
pub fn best_reduction(g: &SignedDigraph) -> Result<ReductionResult> {
    let btr = min_btr(g)?;
    let kry = solve(g, Algorithm::Kry, &SolveOptions::default())
        .and_then(|r| verify_repair(g, &r.kept, true));
    match kry {
        Ok(kept) if kept.len() < btr.kept.len() => Ok(ReductionResult::from_kept(
            g,
            kept,
            "kry",
            Vec::new(),
            true,
            btr.stats.lower_bound,
        )),
        _ => Ok(btr),
    }
}

/// Drop synthetic nodes stranded by a reduction: any listed node left
/// with no kept in-arc or no kept out-arc loses all its kept arcs, and
/// removals cascade. Returns the cleaned set and the stranded nodes.
/// After a verified reduction this is a no-op (closure preservation
/// forces every formerly-connected node to stay connected); it guards
/// against callers feeding unverified sets downstream.
pub fn pseudonode_transform(
    g: &SignedDigraph,
    kept: &ArcSet,
    pseudo: &[NodeId],
) -> (ArcSet, Vec<NodeId>) {
    let mut kept = kept.clone();
    let mut stranded: Vec<NodeId> = Vec::new();
    let mut gone = vec![false; g.node_count()];
    loop {
        let mut changed = false;
        for &p in pseudo {
            if gone[p.index()] {
                continue;
            }
            let indeg = g.in_arcs(p).iter().filter(|id| kept.contains(**id)).count();
            let outdeg = g.out_arcs(p).iter().filter(|id| kept.contains(**id)).count();
            if indeg == 0 || outdeg == 0 {
                gone[p.index()] = true;
                stranded.push(p);
                for id in g.in_arcs(p).iter().chain(g.out_arcs(p).iter()) {
                    kept.remove(*id);
                }
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    stranded.sort();
    (kept, stranded)
}

/// When a strongly-connected-only algorithm meets a general graph, run it
/// per component and recombine.
fn sc_or_decompose<F>(
    g: &SignedDigraph,
    name: &'static str,
    repair: bool,
    mut f: F,
) -> Result<ReductionResult>
where
    F: FnMut(&SignedDigraph, bool) -> Result<ReductionResult>,
{
    if is_strongly_connected(g) {
        f(g, repair)
    } else {
        decompose_impl(g, name, false, repair, |sub| {
            f(sub, true).map(|r| SccSolution::plain(r.kept))
        })
    }
}

/// Run `algorithm` on `g`. Strongly-connected-only algorithms are applied
/// per component when the input is not strongly connected.
pub fn solve(g: &SignedDigraph, algorithm: Algorithm, options: &SolveOptions) -> Result<ReductionResult> {
    match algorithm {
        Algorithm::Dag => crate::reduce::dag_reduce(g, options.label_aware),
        Algorithm::Oracle => oracle::exact_min(g, options.label_aware),
        Algorithm::OracleWeighted => oracle::exact_min_weighted(g, options.label_aware),
        Algorithm::Btr => btr_impl(g, options.repair),
        Algorithm::Fj => sc_or_decompose(g, "fj", options.repair, fj_impl),
        Algorithm::Critical2 => sc_or_decompose(g, "critical2", options.repair, critical2_impl),
        Algorithm::Kry => {
            let budget = options.cycle_budget;
            let c = options.kry_c;
            sc_or_decompose(g, "kry", options.repair, move |sub, rep| {
                kry_impl(sub, c, budget, rep)
            })
        }
        Algorithm::Maxed2 => sc_or_decompose(g, "maxed2", options.repair, maxed2_impl),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::exact_min;

    fn graph(text: &str) -> SignedDigraph {
        SignedDigraph::parse_edge_list(text).unwrap()
    }

    #[test]
    fn fj_keeps_a_plain_cycle() {
        let g = graph("a b +\nb c +\nc a +\n");
        let r = fj_weighted_min_ed(&g).unwrap();
        assert_eq!(r.stats.kept_count, 3);
        assert!(r.verified);
    }

    #[test]
    fn fj_is_within_factor_two_on_bidirected_triangle() {
        let g = graph("a b +\nb a +\nb c +\nc b +\nc a +\na c +\n");
        let r = fj_weighted_min_ed(&g).unwrap();
        let opt = exact_min(&g, false).unwrap().stats.kept_count;
        assert_eq!(opt, 3);
        assert!(r.stats.kept_count <= 2 * opt);
        assert!(r.verified);
    }

    #[test]
    fn fj_requires_strong_connectivity() {
        let g = graph("a b +\n");
        assert_eq!(fj_weighted_min_ed(&g), Err(Error::NotStronglyConnected));
    }

    #[test]
    fn critical2_keeps_forced_chord() {
        let g = graph("a b +\nb c +\nc a +\na c + crit\n");
        let r = critical_min_ed_2approx(&g).unwrap();
        assert_eq!(r.stats.kept_count, 4);
        assert!(r.kept.is_subset_of(&g.all_arcs()));
        assert!(r.verified);
    }

    #[test]
    fn critical2_reuses_critical_arcs_for_free() {
        let g = graph("a b + crit\nb a +\na c +\nc a +\n");
        let r = critical_min_ed_2approx(&g).unwrap();
        assert_eq!(r.stats.kept_count, 4); // already minimal
        assert!(r.verified);
    }

    #[test]
    fn kry_contracts_a_chorded_cycle() {
        let g = graph("a b +\nb c +\nc d +\nd a +\na c +\n");
        let r = kry_contract(&g, 12).unwrap();
        assert_eq!(r.stats.kept_count, 4);
        assert!(r.verified);
    }

    #[test]
    fn kry_spans_a_bidirected_path() {
        let g = graph("a b +\nb a +\nb c +\nc b +\n");
        let r = kry_contract(&g, 12).unwrap();
        assert_eq!(r.stats.kept_count, 4);
        assert!(r.verified);
    }

    #[test]
    fn kry_budget_error_when_exhausted() {
        let g = graph("a b +\nb c +\nc d +\nd a +\n");
        assert_eq!(
            kry_impl(&g, 12, 1, true),
            Err(Error::CycleSearchBudgetExceeded)
        );
    }

    #[test]
    fn maxed2_deletes_the_only_redundant_arc() {
        let g = graph("a b +\nb c +\nc a +\na c +\n");
        let r = critical_max_ed_2approx(&g).unwrap();
        assert_eq!(r.deleted.len(), 1);
        assert!(r.verified);
    }

    #[test]
    fn maxed2_respects_criticals() {
        let g = graph("a b +\nb c +\nc a +\na c + crit\n");
        let r = critical_max_ed_2approx(&g).unwrap();
        assert_eq!(r.deleted.len(), 0);
    }

    #[test]
    fn maxed2_connects_necessary_components() {
        let g = graph("a b +\nb a +\nc d +\nd c +\nb c +\na c +\nd a +\n");
        let r = critical_max_ed_2approx(&g).unwrap();
        assert!(r.verified);
        let opt_del = g.arc_count() - exact_min(&g, false).unwrap().stats.kept_count;
        assert_eq!(opt_del, 3);
        assert!(r.deleted.len() * 2 >= opt_del);
        assert_eq!(r.deleted.len(), 3); // happens to hit the optimum here
    }

    #[test]
    fn btr_matches_oracle_on_parity_walk_graph() {
        let g = graph("a b +\na b -\nb a +\n");
        let r = min_btr(&g).unwrap();
        assert_eq!(r.stats.kept_count, 2);
        assert!(r.verified);
        assert!(r.augmentations.is_empty());
    }

    #[test]
    fn btr_handles_mixed_components() {
        let g = graph("a b -\nb a +\nb c +\nc c -\n");
        let r = min_btr(&g).unwrap();
        assert_eq!(r.stats.kept_count, 4);
        assert!(r.verified);
        assert!(closure_equal(&g, &r.kept, true).unwrap());
    }

    #[test]
    fn btr_is_idempotent() {
        let g = graph("a b -\nb a +\nb c +\nc c -\n");
        let first = min_btr(&g).unwrap();
        let (h, _) = g.restrict_arcs(&first.kept).unwrap();
        let second = min_btr(&h).unwrap();
        assert_eq!(second.stats.kept_count, h.arc_count());
    }

    #[test]
    fn btr_adds_one_arc_per_double_parity_component() {
        let g = graph("a b +\nb a -\n");
        let r = min_btr(&g).unwrap();
        assert_eq!(r.stats.kept_count, 2);
        // Both arcs survive; the blind pass alone would also keep both
        // here, so no augmentation was required.
        assert!(r.verified);
    }

    #[test]
    fn pseudonode_cleanup_cascades() {
        let g = graph("a p +\np b +\na b +\n");
        let p = g.node_by_name("p").unwrap();
        let mut kept = g.all_arcs();
        kept.remove(g.find_arc(g.node_by_name("a").unwrap(), p, Sign::Pos).unwrap());
        let (cleaned, stranded) = pseudonode_transform(&g, &kept, &[p]);
        assert_eq!(stranded, vec![p]);
        assert_eq!(cleaned.len(), 1); // only a -> b remains
    }

    #[test]
    fn solve_wraps_non_strongly_connected_inputs() {
        let g = graph("a b +\nb a +\nc d +\nd c +\nb c +\n");
        let r = solve(&g, Algorithm::Fj, &SolveOptions::default()).unwrap();
        assert_eq!(r.stats.kept_count, 5);
        assert!(r.verified);
    }

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!("nope".parse::<Algorithm>().is_err());
    }

    #[test]
    fn verify_off_reports_honestly() {
        let g = graph("a b +\nb c +\nc a +\na c +\n");
        let opts = SolveOptions {
            repair: false,
            ..SolveOptions::default()
        };
        let r = solve(&g, Algorithm::Fj, &opts).unwrap();
        assert!(r.verified); // raw union is valid, just maybe redundant
    }
}
