//! Brute-force reference implementations for the test suites.
//!
//! Everything here trades speed for obviousness and shares no code with
//! the main crate's algorithms: closures are computed by saturating a
//! boolean matrix, optima by scanning arc subsets, and arborescences by
//! enumerating parent functions. Intended for graphs of at most a handful
//! of nodes.

use rand::Rng;
use tredkit_core::{ArcId, ArcSet, DigraphBuilder, NodeId, Sign, SignedDigraph, Weight};

/// `reach[u][v][p]` says a walk from `u` to `v` with sign product `p`
/// exists (`p`: 0 = positive, 1 = negative). The empty walk makes the
/// positive diagonal true.
pub type ReachMatrix = Vec<Vec<[bool; 2]>>;

fn sign_bit(s: Sign) -> usize {
    match s {
        Sign::Pos => 0,
        Sign::Neg => 1,
    }
}

/// Walk reachability of the subgraph `kept` (all arcs if `None`), by
/// fixpoint saturation of the composition rule.
pub fn matrix_closure(g: &SignedDigraph, kept: Option<&ArcSet>) -> ReachMatrix {
    let n = g.node_count();
    let mut reach: ReachMatrix = vec![vec![[false; 2]; n]; n];
    for (u, row) in reach.iter_mut().enumerate() {
        row[u][0] = true;
    }
    for (i, a) in g.arcs().iter().enumerate() {
        if kept.map_or(true, |k| k.contains(ArcId(i as u32))) {
            reach[a.src.index()][a.dst.index()][sign_bit(a.label)] = true;
        }
    }
    loop {
        let mut changed = false;
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    for p1 in 0..2 {
                        for p2 in 0..2 {
                            if reach[u][v][p1] && reach[v][w][p2] && !reach[u][w][p1 ^ p2] {
                                reach[u][w][p1 ^ p2] = true;
                                changed = true;
                            }
                        }
                    }
                }
            }
        }
        if !changed {
            return reach;
        }
    }
}

/// Whether every arc of `g` is realized by a walk inside `kept` — with
/// matching sign when `aware`, any sign otherwise.
pub fn preserves_closure(g: &SignedDigraph, kept: &ArcSet, aware: bool) -> bool {
    let reach = matrix_closure(g, Some(kept));
    g.arcs().iter().all(|a| {
        let r = &reach[a.src.index()][a.dst.index()];
        if aware {
            r[sign_bit(a.label)]
        } else {
            r[0] || r[1]
        }
    })
}

/// A valid reduction keeps every critical arc and preserves the closure.
pub fn is_valid_reduction(g: &SignedDigraph, kept: &ArcSet, aware: bool) -> bool {
    g.critical_set().is_subset_of(kept) && preserves_closure(g, kept, aware)
}

/// No non-critical kept arc can be dropped without breaking the closure.
pub fn is_irredundant(g: &SignedDigraph, kept: &ArcSet, aware: bool) -> bool {
    kept.iter().all(|id| {
        if g.arc(id).critical {
            return true;
        }
        let mut smaller = kept.clone();
        smaller.remove(id);
        !preserves_closure(g, &smaller, aware)
    })
}

/// Minimum kept-arc count over all valid reductions, by scanning every
/// subset of the non-critical arcs. Panics above 20 free arcs.
pub fn min_kept_subset_scan(g: &SignedDigraph, aware: bool) -> usize {
    let base = g.critical_set();
    let free: Vec<ArcId> = g.all_arcs().iter().filter(|id| !base.contains(*id)).collect();
    assert!(free.len() <= 20, "subset scan capped at 20 free arcs");
    let mut best = usize::MAX;
    for mask in 0u32..(1u32 << free.len()) {
        let size = base.len() + mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let mut kept = base.clone();
        for (i, &id) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                kept.insert(id);
            }
        }
        if preserves_closure(g, &kept, aware) {
            best = size;
        }
    }
    best
}

/// Minimum kept weight over all valid reductions, same scan as
/// [`min_kept_subset_scan`].
pub fn min_weight_subset_scan(g: &SignedDigraph, aware: bool) -> Weight {
    let base = g.critical_set();
    let free: Vec<ArcId> = g.all_arcs().iter().filter(|id| !base.contains(*id)).collect();
    assert!(free.len() <= 20, "subset scan capped at 20 free arcs");
    let mut best: Option<Weight> = None;
    for mask in 0u32..(1u32 << free.len()) {
        let mut kept = base.clone();
        for (i, &id) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                kept.insert(id);
            }
        }
        if preserves_closure(g, &kept, aware) {
            let w: Weight = kept.iter().map(|id| g.arc(id).weight).sum();
            if best.map_or(true, |b| w < b) {
                best = Some(w);
            }
        }
    }
    best.expect("the full arc set is always valid")
}

/// Strongly connected components as sorted node-index sets, from the
/// pairwise reachability matrix. Component order follows smallest member.
pub fn sccs_brute(g: &SignedDigraph) -> Vec<Vec<usize>> {
    let n = g.node_count();
    let reach = matrix_closure(g, None);
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for u in 0..n {
        if seen[u] {
            continue;
        }
        let mut comp = Vec::new();
        for v in 0..n {
            if (reach[u][v][0] || reach[u][v][1]) && (reach[v][u][0] || reach[v][u][1]) {
                comp.push(v);
                seen[v] = true;
            }
        }
        out.push(comp);
    }
    out
}

/// Minimum spanning arborescence weight by enumerating parent functions:
/// every non-root node picks its cheapest arc toward each possible
/// neighbor, and all parent assignments whose pointer chains reach the
/// root are scanned. `None` when no arborescence exists.
pub fn brute_min_arborescence(g: &SignedDigraph, root: NodeId, out: bool) -> Option<Weight> {
    let n = g.node_count();
    assert!(n <= 7, "parent-function scan capped at 7 nodes");
    if n == 0 {
        return None;
    }
    // candidates[v]: (neighbor, weight) with the per-pair minimum weight.
    // For an out-arborescence v's pointer is an in-arc src->v; for an
    // in-arborescence it is an out-arc v->dst.
    let mut candidates: Vec<Vec<(usize, Weight)>> = vec![Vec::new(); n];
    for a in g.arcs() {
        let (v, other) = if out {
            (a.dst.index(), a.src.index())
        } else {
            (a.src.index(), a.dst.index())
        };
        if v == other {
            continue;
        }
        match candidates[v].iter_mut().find(|(o, _)| *o == other) {
            Some(slot) => {
                if a.weight < slot.1 {
                    slot.1 = a.weight;
                }
            }
            None => candidates[v].push((other, a.weight)),
        }
    }
    let slots: Vec<usize> = (0..n).filter(|&v| v != root.index()).collect();
    if slots.iter().any(|&v| candidates[v].is_empty()) {
        return None;
    }
    let mut choice = vec![0usize; slots.len()];
    let mut best: Option<Weight> = None;
    loop {
        let mut parent = vec![usize::MAX; n];
        let mut total = Weight::zero();
        for (i, &v) in slots.iter().enumerate() {
            let (p, w) = candidates[v][choice[i]];
            parent[v] = p;
            total = total + w;
        }
        let reaches_root = slots.iter().all(|&v| {
            let mut cur = v;
            for _ in 0..n {
                if cur == root.index() {
                    return true;
                }
                cur = parent[cur];
            }
            false
        });
        if reaches_root && best.map_or(true, |b| total < b) {
            best = Some(total);
        }
        // Mixed-radix increment over the choice vector.
        let mut i = 0;
        loop {
            if i == slots.len() {
                return best;
            }
            choice[i] += 1;
            if choice[i] < candidates[slots[i]].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Every loop-free digraph on `n` nodes (all arcs positive, unit weight,
/// non-critical): one graph per subset of the `n * (n-1)` ordered pairs.
pub fn exhaustive_unlabeled_digraphs(n: usize) -> Vec<SignedDigraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() <= 16);
    let mut out = Vec::with_capacity(1 << pairs.len());
    for mask in 0u32..(1u32 << pairs.len()) {
        let mut b = DigraphBuilder::new();
        let ids: Vec<NodeId> = (0..n).map(|i| b.node(&format!("v{i}"))).collect();
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                b.add_arc(ids[u], ids[v], Sign::Pos);
            }
        }
        out.push(b.build());
    }
    out
}

/// Every signed loop-free digraph on 3 nodes: each of the 6 ordered pairs
/// independently carries nothing, `+`, `-`, or both parallel arcs.
pub fn exhaustive_signed_3node() -> Vec<SignedDigraph> {
    let pairs: Vec<(usize, usize)> = (0..3)
        .flat_map(|u| (0..3).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::with_capacity(4096);
    for code in 0u32..4u32.pow(6) {
        let mut b = DigraphBuilder::new();
        let ids: Vec<NodeId> = (0..3).map(|i| b.node(&format!("v{i}"))).collect();
        for (i, &(u, v)) in pairs.iter().enumerate() {
            let state = code / 4u32.pow(i as u32) % 4;
            if state == 1 || state == 3 {
                b.add_arc(ids[u], ids[v], Sign::Pos);
            }
            if state == 2 || state == 3 {
                b.add_arc(ids[u], ids[v], Sign::Neg);
            }
        }
        out.push(b.build());
    }
    out
}

/// A random loop-free signed digraph with exactly `m` distinct
/// `(src, dst, label)` triples, not necessarily strongly connected.
pub fn random_signed_digraph<R: Rng>(
    rng: &mut R,
    n: usize,
    m: usize,
    neg_fraction: f64,
    crit_fraction: f64,
) -> SignedDigraph {
    assert!(m <= 2 * n * (n - 1));
    let mut b = DigraphBuilder::new();
    let ids: Vec<NodeId> = (0..n).map(|i| b.node(&format!("v{i}"))).collect();
    let mut used = std::collections::HashSet::new();
    while used.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let s = if rng.gen_bool(neg_fraction) { Sign::Neg } else { Sign::Pos };
        if used.insert((u, v, s)) {
            b.add_arc_full(ids[u], ids[v], s, Weight::one(), rng.gen_bool(crit_fraction));
        }
    }
    b.build()
}

/// Like [`random_signed_digraph`] with random two-decimal weights in
/// `(0, 4]`.
pub fn random_weighted_digraph<R: Rng>(rng: &mut R, n: usize, m: usize) -> SignedDigraph {
    assert!(m <= n * (n - 1));
    let mut b = DigraphBuilder::new();
    let ids: Vec<NodeId> = (0..n).map(|i| b.node(&format!("v{i}"))).collect();
    let mut used = std::collections::HashSet::new();
    while used.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || !used.insert((u, v)) {
            continue;
        }
        let cents = rng.gen_range(1..=400);
        let w = Weight::parse_decimal(&format!("{}.{:02}", cents / 100, cents % 100)).unwrap();
        b.add_arc_full(ids[u], ids[v], Sign::Pos, w, false);
    }
    b.build()
}
