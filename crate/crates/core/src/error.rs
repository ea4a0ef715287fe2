use thiserror::Error;

/// Errors raised by the alcove-walk engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown root system type `{0}`")]
    UnknownType(String),
    #[error("rank {rank} is out of range for type {family}")]
    RankOutOfRange { family: char, rank: usize },
    #[error("index {index} out of range (valid: {lo}..={hi})")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },
    #[error("coweight has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("coweight {0} is not dominant")]
    NotDominant(String),
    #[error("Weyl group order {order} exceeds the configured limit {limit}")]
    GroupTooLarge { order: u64, limit: u64 },
    #[error("walk type has {len} letters, limit is {limit}")]
    TypeTooLong { len: usize, limit: usize },
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error("{mu} is not in the saturated set of {lambda}")]
    NotInSaturatedSet { lambda: String, mu: String },
    #[error("word {0:?} is not a reduced word for the longest element")]
    NotReducedWord(Vec<usize>),
    #[error("root operator killed a walk during path construction: {0}")]
    InternalOperatorDeath(String),
    #[error("root operator case detection is inconsistent: {0}")]
    CaseConflict(String),
    #[error("evaluation point is singular: {0}")]
    SingularPoint(String),
}

pub type Result<T> = std::result::Result<T, Error>;
