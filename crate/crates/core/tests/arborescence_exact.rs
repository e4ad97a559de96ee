//! The contraction-based arborescence solver against an enumeration of
//! parent functions, plus algebraic invariants.

use proptest::prelude::*;
use tredkit_core::{
    min_in_arborescence, min_out_arborescence, seeded_rng, DigraphBuilder, Error, NodeId, Sign,
    SignedDigraph, Weight,
};
use tredkit_testutil::{brute_min_arborescence, random_weighted_digraph};

#[test]
fn matches_parent_function_enumeration_on_many_random_graphs() {
    let mut rng = seeded_rng(0xa2b0);
    let mut solved = 0;
    for round in 0..400 {
        use rand::Rng;
        let n = 2 + round % 5; // up to 6 nodes
        let max_m = n * (n - 1);
        let m = rng.gen_range(n.min(max_m)..=max_m);
        let g = random_weighted_digraph(&mut rng, n, m);
        let root = NodeId(rng.gen_range(0..n) as u32);
        for out in [true, false] {
            let want = brute_min_arborescence(&g, root, out);
            let got = if out {
                min_out_arborescence(&g, root)
            } else {
                min_in_arborescence(&g, root)
            };
            match want {
                Some(w) => {
                    let arb = got.unwrap_or_else(|e| {
                        panic!("solver failed ({e}) where brute force found weight {w} on\n{}",
                            g.to_edge_list())
                    });
                    assert_eq!(
                        arb.total_weight,
                        w,
                        "out={out} root={root:?} graph:\n{}",
                        g.to_edge_list()
                    );
                    // The reported arc set must itself be a spanning
                    // arborescence of the reported weight.
                    assert_eq!(arb.arcs.len(), n - 1);
                    let sum: Weight = arb.arcs.iter().map(|&id| g.arc(id).weight).sum();
                    assert_eq!(sum, arb.total_weight);
                    let mut indeg = vec![0usize; n];
                    for &id in &arb.arcs {
                        let a = g.arc(id);
                        let v = if out { a.dst } else { a.src };
                        indeg[v.index()] += 1;
                    }
                    assert_eq!(indeg[root.index()], 0);
                    assert!((0..n).all(|v| v == root.index() || indeg[v] == 1));
                    solved += 1;
                }
                None => assert_eq!(got.unwrap_err(), Error::NoArborescence),
            }
        }
    }
    assert!(solved >= 300, "suite too thin: {solved} solvable instances");
}

#[test]
fn in_arborescence_equals_out_on_the_reversed_graph() {
    let mut rng = seeded_rng(0x1e1e);
    for _ in 0..100 {
        let g = random_weighted_digraph(&mut rng, 5, 12);
        let (rev, _) = g.reversed();
        for root in 0..5 {
            let root = NodeId(root);
            let a = min_in_arborescence(&g, root);
            let b = min_out_arborescence(&rev, root);
            match (a, b) {
                (Ok(x), Ok(y)) => assert_eq!(x.total_weight, y.total_weight),
                (Err(x), Err(y)) => assert_eq!(x, y),
                (x, y) => panic!("disagree: {x:?} vs {y:?}"),
            }
        }
    }
}

/// Arc lists over 4 nodes with weights in cents; root is node 0.
fn arb_graph() -> impl Strategy<Value = Vec<(u8, u8, u16)>> {
    proptest::collection::vec((0u8..4, 0u8..4, 1u16..300), 1..14)
}

fn build(arcs: &[(u8, u8, u16)], scale: u16, shift: u16) -> SignedDigraph {
    let mut b = DigraphBuilder::new();
    let ids: Vec<NodeId> = (0..4).map(|i| b.node(&format!("v{i}"))).collect();
    for &(u, v, w) in arcs {
        if u == v {
            continue;
        }
        let cents = u32::from(w) * u32::from(scale) + u32::from(shift);
        let w = Weight::parse_decimal(&format!("{}.{:02}", cents / 100, cents % 100)).unwrap();
        b.add_arc_full(ids[u as usize], ids[v as usize], Sign::Pos, w, false);
    }
    b.build()
}

proptest! {
    #[test]
    fn scaling_weights_scales_the_optimum(arcs in arb_graph()) {
        let base = build(&arcs, 1, 0);
        let tripled = build(&arcs, 3, 0);
        match (min_out_arborescence(&base, NodeId(0)), min_out_arborescence(&tripled, NodeId(0))) {
            (Ok(a), Ok(b)) => {
                let w = a.total_weight;
                prop_assert_eq!(w + w + w, b.total_weight);
                prop_assert_eq!(a.arcs.len(), b.arcs.len());
            }
            (Err(a), Err(b)) => prop_assert_eq!(a, b),
            (a, b) => prop_assert!(false, "disagree: {:?} vs {:?}", a, b),
        }
    }

    #[test]
    fn shifting_weights_adds_n_minus_one_shifts(arcs in arb_graph()) {
        let base = build(&arcs, 1, 0);
        let shifted = build(&arcs, 1, 500);
        match (min_out_arborescence(&base, NodeId(0)), min_out_arborescence(&shifted, NodeId(0))) {
            (Ok(a), Ok(b)) => {
                let bump = Weight::parse_decimal("15").unwrap(); // 3 arcs x 5.00
                prop_assert_eq!(a.total_weight + bump, b.total_weight);
            }
            (Err(a), Err(b)) => prop_assert_eq!(a, b),
            (a, b) => prop_assert!(false, "disagree: {:?} vs {:?}", a, b),
        }
    }
}
