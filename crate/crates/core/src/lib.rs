//! Reduction toolkit for signed directed graphs.
//!
//! The central object is a [`SignedDigraph`]: a directed graph whose arcs
//! carry an activation (`+1`) or inhibition (`-1`) label, an exact decimal
//! weight, and an optional "critical" flag marking arcs that every solution
//! must retain. The questions answered here are of the form "which arcs can
//! be deleted without changing what the graph expresses?", where the
//! expressed relation is either plain reachability (label-blind) or the set
//! of reachable sign parities (label-aware).
//!
//! Modules:
//!
//! * [`graph`] - graph construction, the edge-list text format, arc subsets.
//! * [`closure`] - parity closure, closure equality, parity classification.
//! * [`condense`] - strongly connected components and the parity-annotated
//!   condensation.
//! * [`reduce`] - exact reduction on DAGs, the decompose/solve/combine
//!   pipeline, the one-arc parity augmentation, and the verify/repair net.
//! * [`arborescence`] - exact minimum spanning in-/out-arborescences.
//! * [`solvers`] - approximation algorithms: the two-arborescence
//!   2-approximation, its critical-arc variant, cycle-contraction, the
//!   maximum-deletion 2-approximation, and the signed reduction pipeline.
//! * [`lp`] - cut-covering linear programs solved in exact rational
//!   arithmetic, the bipartite matching lower bound, and ratio reporting.
//! * [`oracle`] - brute-force exact optima for small instances.
//! * [`synthesis`] - building networks from interaction evidence and
//!   measuring their redundancy.
//! * [`generate`] - seeded random strongly connected instances.

pub mod arborescence;
pub mod closure;
pub mod condense;
mod error;
pub mod generate;
pub mod graph;
pub mod lp;
pub mod oracle;
pub mod reduce;
pub mod solvers;
pub mod synthesis;

pub use arborescence::{min_in_arborescence, min_out_arborescence, Arborescence, Orientation};
pub use closure::{classify_parity, closure_equal, parity_closure, ParityClass, ParityClosure};
pub use condense::{is_strongly_connected, scc_condense, Condensation};
pub use error::Error;
pub use generate::{random_sc_graph, seeded_rng, GenConfig};
pub use graph::{Arc, ArcId, ArcSet, DigraphBuilder, NodeId, Sign, SignedDigraph, Weight};
pub use lp::{
    cut_set, integrality_gap, matching_lower_bound, ratio_report, solve_lp_small, CutSet,
    LpSolution, LpVariant,
};
pub use oracle::{exact_max_deletions, exact_min, exact_min_weighted};
pub use reduce::{
    dag_reduce, decompose_solve_combine, parity_augment, verify_repair, ReductionResult, Stats,
};
pub use solvers::{
    best_reduction, critical_max_ed_2approx, critical_min_ed_2approx, fj_weighted_min_ed,
    kry_contract, min_btr,
    pseudonode_transform, solve, Algorithm, SolveOptions,
};
pub use synthesis::{
    build_graph, parse_evidence, redundancy, redundancy_exact, synthesize, Evidence,
    EvidenceGraph, EvidenceKind, PseudoNode, SynthesisOutput,
};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
