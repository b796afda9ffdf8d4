use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unsupported series {0:?} (only \"A\" is implemented)")]
    UnsupportedSeries(String),

    #[error("rank {rank} out of range 1..={max}")]
    RankOutOfRange { rank: usize, max: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("regularity violated at root {0}")]
    RegularityViolated(String),

    #[error("matrix is singular")]
    Singular,

    /// Two independent implementations of the same test disagreed.
    #[error("oracle disagreement: {0}")]
    OracleDisagreement(String),

    #[error("invariant failure: {0}")]
    InvariantFailure(String),

    #[error("twist condition fails; residual has {terms} nonzero terms")]
    TwistConditionFailed { terms: usize, residual: crate::tensor::Tensor3 },

    #[error("parse error: {0}")]
    Parse(String),
}
