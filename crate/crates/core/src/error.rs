use thiserror::Error;

/// Errors raised by the optimizer, benchmark suite and statistics routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("coordinate {index} = {value} lies outside [{lower}, {upper}]")]
    OutOfBounds {
        index: usize,
        value: f64,
        lower: f64,
        upper: f64,
    },

    #[error("invalid bounds: {0}")]
    InvalidBounds(String),

    #[error("invalid parameter `{field}`: {reason}")]
    InvalidParams { field: &'static str, reason: String },

    #[error("unknown problem id `{0}`")]
    UnknownProblem(String),

    #[error("{id} does not support dimension {dimension}; allowed: {allowed}")]
    UnsupportedDimension {
        id: String,
        dimension: usize,
        allowed: String,
    },

    #[error("no information: every paired difference is zero")]
    NoInformation,

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
