use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("graph is not connected")]
    NotConnected,
    #[error("embedding has genus {0}, expected a plane embedding")]
    NotGenusZero(usize),
    #[error("minimum non-triangular face length must be at least 7, got {0}")]
    InvalidM(i64),
    #[error("no 4-critical graph has {0} vertices (need at least 4)")]
    InvalidN(i64),
    #[error("peel trace is stuck; greedy extension needs a fully peeled graph")]
    TraceIncomplete,
    #[error("coloring assigns {assigned} of {expected} vertices")]
    PartialAssignment { assigned: usize, expected: usize },
    #[error("search budget of {0} nodes exceeded")]
    SearchBudgetExceeded(u64),
    #[error("embedding enumeration budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("malformed graph6 at byte {offset}: {reason}")]
    MalformedGraph6 { offset: usize, reason: String },
    #[error("malformed planar_code in record {record}: {reason}")]
    MalformedPlanarCode { record: usize, reason: String },
    #[error("requested {requested} vertices exceeds generation cap of {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("invalid rational: {0}")]
    InvalidRational(String),
}
