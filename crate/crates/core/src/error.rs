use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph is not strongly connected")]
    NotStronglyConnected,

    #[error("graph is not acyclic")]
    NotAcyclic,

    #[error("node {0} is not reachable in the required orientation")]
    Unreachable(String),

    #[error("arc set does not belong to this graph")]
    ArcNotInGraph,

    #[error("instance too large for this operation: {0}")]
    TooLarge(String),

    #[error("linear program is infeasible")]
    Infeasible,

    #[error("kept arc set contains no spanning out-arborescence")]
    NoArborescence,

    #[error("graph mixes parities but no label-violating arc exists")]
    MissingWitness,

    #[error("cycle search exceeded its expansion budget (lower the contraction parameter)")]
    CycleSearchBudgetExceeded,

    #[error("empty graph")]
    EmptyGraph,

    #[error("{0}")]
    Domain(String),
}
