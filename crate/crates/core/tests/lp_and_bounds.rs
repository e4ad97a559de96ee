//! Lower-bound machinery against brute force: LP values versus subset
//! scans, the rooted LP versus the exact arborescence, and the matching
//! bound.

use tredkit_core::{
    exact_min, matching_lower_bound, min_out_arborescence, ratio_report, seeded_rng,
    solve_lp_small, Error, GenConfig, LpVariant, NodeId, SignedDigraph,
};
use tredkit_testutil::{min_kept_subset_scan, min_weight_subset_scan, random_weighted_digraph};

fn directed_cycle(n: usize) -> SignedDigraph {
    let mut text = String::new();
    for i in 0..n {
        text.push_str(&format!("v{} v{} +\n", i, (i + 1) % n));
    }
    SignedDigraph::parse_edge_list(&text).unwrap()
}

#[test]
fn min_ed_lp_is_a_lower_bound_for_the_optimum() {
    let mut rng = seeded_rng(0x11bb);
    let mut tight = 0;
    for round in 0..120 {
        let cfg = GenConfig {
            nodes: 3 + round % 3,
            arcs: 4 + round % 6,
            neg_fraction: 0.2,
            crit_fraction: 0.0,
        };
        let g = tredkit_core::random_sc_graph(&mut rng, &cfg);
        let lp = solve_lp_small(&g, LpVariant::MinEd).unwrap();
        let opt = min_kept_subset_scan(&g, false);
        assert!(
            lp.value_f64() <= opt as f64 + 1e-9,
            "LP {} > OPT {} on\n{}",
            lp.value_f64(),
            opt,
            g.to_edge_list()
        );
        if (lp.value_f64() - opt as f64).abs() < 1e-9 {
            tight += 1;
        }
    }
    assert!(tight >= 30, "LP should be tight reasonably often; got {tight}");
}

#[test]
fn critical_variant_respects_forced_arcs() {
    let mut rng = seeded_rng(0x22cc);
    for round in 0..80 {
        let cfg = GenConfig {
            nodes: 4,
            arcs: 6 + round % 4,
            neg_fraction: 0.2,
            crit_fraction: 0.3,
        };
        let g = tredkit_core::random_sc_graph(&mut rng, &cfg);
        let lp = solve_lp_small(&g, LpVariant::Critical).unwrap();
        let opt = min_kept_subset_scan(&g, false);
        assert!(lp.value_f64() <= opt as f64 + 1e-9);
        // A critical arc carries the singleton cover `x_e >= 1`, and with
        // positive weight no optimum pushes past it: x_e is exactly 1.
        for id in g.critical_set().iter() {
            assert_eq!(
                lp.arc_values[id.index()],
                num::BigRational::from_integer(1.into()),
                "critical arc not saturated on\n{}",
                g.to_edge_list()
            );
        }
    }
}

#[test]
fn rooted_lp_equals_the_exact_arborescence() {
    let mut rng = seeded_rng(0x33dd);
    let mut solved = 0;
    for _ in 0..150 {
        use rand::Rng;
        let n = rng.gen_range(2..=5);
        let m = rng.gen_range(n..=n * (n - 1));
        let g = random_weighted_digraph(&mut rng, n, m);
        let root = NodeId(rng.gen_range(0..n) as u32);
        let lp = solve_lp_small(&g, LpVariant::Rooted { root });
        let arb = min_out_arborescence(&g, root);
        match (lp, arb) {
            (Ok(lp), Ok(arb)) => {
                let r = arb.total_weight.ratio();
                let exact = num::BigRational::new((*r.numer()).into(), (*r.denom()).into());
                assert_eq!(lp.value, exact, "graph:\n{}", g.to_edge_list());
                solved += 1;
            }
            (Err(Error::Infeasible), Err(Error::NoArborescence)) => {}
            (lp, arb) => panic!("disagree: {lp:?} vs {arb:?}\n{}", g.to_edge_list()),
        }
    }
    assert!(solved >= 60);
}

#[test]
fn weighted_oracle_matches_subset_scan() {
    let mut rng = seeded_rng(0x44ee);
    for _ in 0..60 {
        let g = random_weighted_digraph(&mut rng, 4, 9);
        for aware in [false, true] {
            let res = tredkit_core::exact_min_weighted(&g, aware).unwrap();
            let got: tredkit_core::Weight =
                res.kept.iter().map(|id| g.arc(id).weight).sum();
            assert_eq!(got, min_weight_subset_scan(&g, aware), "graph:\n{}", g.to_edge_list());
        }
    }
}

#[test]
fn matching_bound_is_sound_and_tight_on_cycles() {
    let mut rng = seeded_rng(0x55ff);
    for n in 2..=8 {
        let g = directed_cycle(n);
        assert_eq!(matching_lower_bound(&g), n);
        assert_eq!(exact_min(&g, false).unwrap().kept.len(), n);
    }
    for round in 0..120 {
        let cfg = GenConfig {
            nodes: 3 + round % 4,
            arcs: 4 + round % 7,
            neg_fraction: 0.2,
            crit_fraction: 0.0,
        };
        let g = tredkit_core::random_sc_graph(&mut rng, &cfg);
        let bound = matching_lower_bound(&g);
        let opt = min_kept_subset_scan(&g, false);
        assert!(bound <= opt, "bound {bound} > OPT {opt} on\n{}", g.to_edge_list());
    }
}

#[test]
fn integrality_gap_is_at_least_one() {
    let mut rng = seeded_rng(0x66aa);
    for round in 0..60 {
        let cfg = GenConfig {
            nodes: 3 + round % 3,
            arcs: 4 + round % 5,
            neg_fraction: 0.0,
            crit_fraction: 0.0,
        };
        let g = tredkit_core::random_sc_graph(&mut rng, &cfg);
        let gap = tredkit_core::integrality_gap(&g, LpVariant::MinEd).unwrap();
        assert!(gap >= num::BigRational::from_integer(1.into()));
    }
    for n in 3..=6 {
        let gap = tredkit_core::integrality_gap(&directed_cycle(n), LpVariant::MinEd).unwrap();
        assert_eq!(gap, num::BigRational::from_integer(1.into()));
    }
}

#[test]
fn ratio_report_is_exact() {
    assert_eq!(ratio_report(1000, 490, 980), (2.0, 25.5));
    assert_eq!(ratio_report(7, 7, 7), (1.0, 1.0));
    let (r, d) = ratio_report(10, 4, 10);
    assert_eq!(r, 2.5);
    assert!(d.is_infinite());
}
