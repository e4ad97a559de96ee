//! Exhaustive-search optima for small instances.
//!
//! These are the reference answers the approximation algorithms are judged
//! against. All of them enumerate subsets of the non-critical arcs, so
//! they are capped at 24 free arcs ([`Error::TooLarge`] beyond that) and
//! meant for graphs with at most a couple dozen arcs.

use crate::closure::ReachEngine;
use crate::graph::{ArcId, ArcSet, SignedDigraph, Weight};
use crate::reduce::ReductionResult;
use crate::{Error, Result};
use std::cmp::Ordering;

const MAX_FREE_ARCS: usize = 24;

fn free_arcs(g: &SignedDigraph) -> Result<Vec<ArcId>> {
    let free: Vec<ArcId> = g.arc_ids().filter(|&id| !g.arc(id).critical).collect();
    if free.len() > MAX_FREE_ARCS {
        return Err(Error::TooLarge(format!(
            "{} non-critical arcs exceed the exhaustive-search budget of {}",
            free.len(),
            MAX_FREE_ARCS
        )));
    }
    Ok(free)
}

/// Visit all `k`-subsets of `0..m` in lexicographic order until `f`
/// returns true; reports whether any call did.
fn lex_combinations(m: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    debug_assert!(k <= m);
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        if f(&c) {
            return true;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if c[i] < m - k + i {
                break;
            }
        }
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// Minimum-cardinality closure-preserving arc set containing all critical
/// arcs. Subsets are tried by increasing size and lexicographically within
/// a size, so the result is deterministic; a minimum-size solution is
/// automatically irredundant.
pub fn exact_min(g: &SignedDigraph, label_aware: bool) -> Result<ReductionResult> {
    let free = free_arcs(g)?;
    let base = g.critical_set();
    let mut eng = ReachEngine::new(g);
    let mut best = None;
    for k in 0..=free.len() {
        let mut kept = ArcSet::empty(g.arc_count());
        if lex_combinations(free.len(), k, |combo| {
            kept = base.clone();
            for &i in combo {
                kept.insert(free[i]);
            }
            !eng.has_missing_arc(&kept, label_aware)
        }) {
            best = Some(kept);
            break;
        }
    }
    let kept = best.expect("the full arc set always preserves its own closure");
    let bound = Some(kept.len());
    Ok(ReductionResult::from_kept(
        g,
        kept,
        "oracle-min",
        Vec::new(),
        true,
        bound,
    ))
}

/// Compare two free-arc masks lexicographically as sorted id lists: the
/// mask containing the smaller first-differing arc id is smaller.
fn lex_cmp(a: u32, b: u32) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let low = (a ^ b) & (a ^ b).wrapping_neg();
    if a & low != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Minimum-total-weight closure-preserving arc set containing all critical
/// arcs; ties broken by fewer arcs, then lexicographically smallest id
/// set. Scans every subset of the free arcs.
pub fn exact_min_weighted(g: &SignedDigraph, label_aware: bool) -> Result<ReductionResult> {
    let free = free_arcs(g)?;
    let base = g.critical_set();
    let base_weight: Weight = base.iter().map(|id| g.arc(id).weight).sum();
    let free_weight: Vec<Weight> = free.iter().map(|&id| g.arc(id).weight).collect();
    let mut eng = ReachEngine::new(g);
    let mut best: Option<(Weight, usize, u32)> = None;
    for mask in 0u32..(1u32 << free.len()) {
        let size = mask.count_ones() as usize;
        let mut w = base_weight;
        for i in 0..free.len() {
            if mask >> i & 1 == 1 {
                w = w + free_weight[i];
            }
        }
        let improves = match &best {
            None => true,
            Some((bw, bs, bm)) => {
                w.cmp(bw).then(size.cmp(bs)).then_with(|| lex_cmp(mask, *bm)) == Ordering::Less
            }
        };
        if !improves {
            continue;
        }
        let mut kept = base.clone();
        for i in 0..free.len() {
            if mask >> i & 1 == 1 {
                kept.insert(free[i]);
            }
        }
        if !eng.has_missing_arc(&kept, label_aware) {
            best = Some((w, size, mask));
        }
    }
    let (_, _, mask) = best.expect("the full arc set always preserves its own closure");
    let mut kept = base;
    for i in 0..free.len() {
        if mask >> i & 1 == 1 {
            kept.insert(free[i]);
        }
    }
    Ok(ReductionResult::from_kept(
        g,
        kept,
        "oracle-min-weighted",
        Vec::new(),
        true,
        None,
    ))
}

/// Maximum number of arcs deletable while preserving the closure and all
/// critical arcs. Feasibility depends only on the kept set, so this equals
/// `total - |exact_min kept|`.
pub fn exact_max_deletions(g: &SignedDigraph, label_aware: bool) -> Result<usize> {
    let min = exact_min(g, label_aware)?;
    Ok(g.arc_count() - min.stats.kept_count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{NodeId, Sign};

    fn graph(text: &str) -> SignedDigraph {
        SignedDigraph::parse_edge_list(text).unwrap()
    }

    #[test]
    fn cycle_is_already_minimal() {
        let g = graph("a b +\nb c +\nc a +\n");
        let r = exact_min(&g, false).unwrap();
        assert_eq!(r.stats.kept_count, 3);
    }

    #[test]
    fn chord_is_deleted() {
        let g = graph("a b +\nb c +\nc a +\na c +\n");
        let r = exact_min(&g, false).unwrap();
        assert_eq!(r.stats.kept_count, 3);
        assert!(!r.kept.contains(g.find_arc(NodeId(0), NodeId(2), Sign::Pos).unwrap()));
        assert_eq!(exact_max_deletions(&g, false).unwrap(), 1);
    }

    #[test]
    fn walks_may_reuse_arcs_when_matching_parities() {
        // {a-b, b+a} alone realizes (a,b,+) via the walk a,b,a,b, so two
        // arcs suffice even label-aware.
        let g = graph("a b +\na b -\nb a +\n");
        let r = exact_min(&g, true).unwrap();
        assert_eq!(r.stats.kept_count, 2);
        let neg = g.find_arc(NodeId(0), NodeId(1), Sign::Neg).unwrap();
        let back = g.find_arc(NodeId(1), NodeId(0), Sign::Pos).unwrap();
        assert!(r.kept.contains(neg) && r.kept.contains(back));
    }

    #[test]
    fn critical_arcs_are_always_kept() {
        let g = graph("a b +\nb c +\na c + crit\n");
        let r = exact_min(&g, false).unwrap();
        assert_eq!(r.stats.kept_count, 3);
    }

    #[test]
    fn weighted_optimum_prefers_cheap_realizations() {
        let g = graph("a b + w=1\na b - w=9\nb a - w=1\n");
        let r = exact_min_weighted(&g, true).unwrap();
        let total: Weight = r.kept.iter().map(|id| g.arc(id).weight).sum();
        assert_eq!(total, Weight::from_int(2));
        assert_eq!(r.stats.kept_count, 2);
        assert!(!r.kept.contains(g.find_arc(NodeId(0), NodeId(1), Sign::Neg).unwrap()));
    }

    #[test]
    fn budget_is_enforced() {
        let mut b = SignedDigraph::builder();
        let nodes: Vec<NodeId> = (0..26).map(|_| b.add_node()).collect();
        for w in nodes.windows(2) {
            b.add_arc(w[0], w[1], Sign::Pos);
        }
        let g = b.build();
        assert!(matches!(exact_min(&g, false), Err(Error::TooLarge(_))));
    }

    #[test]
    fn empty_graph_keeps_nothing() {
        let g = SignedDigraph::builder().build();
        assert_eq!(exact_min(&g, true).unwrap().stats.kept_count, 0);
        assert_eq!(exact_max_deletions(&g, false).unwrap(), 0);
    }
}
