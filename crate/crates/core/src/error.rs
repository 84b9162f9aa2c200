use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("zero vector has no primitive part")]
    ZeroVector,
    #[error("rank drops under the map: {0}")]
    RankDrop(String),
    #[error("map is not surjective onto the target lattice")]
    NotSurjective,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("no generic displacement found within {0} candidates")]
    DisplacementExhausted(usize),
    #[error("generic projection search exhausted: {0}")]
    SearchExhausted(String),
    #[error("oracle: {0}")]
    Oracle(String),
    #[error("support is not admissible: {}", .0.join("; "))]
    Inadmissible(Vec<String>),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("fan is not smooth: {0}")]
    NotSmooth(String),
    #[error("fan is not complete: {0}")]
    NotComplete(String),
    #[error("cycle is not pure-dimensional: {0}")]
    MixedDimension(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}
