use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The requested type, rank or block is outside the supported range.
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    /// Arguments that do not fit together (mismatched groups, bases, ...).
    #[error("usage error: {0}")]
    Usage(String),
    /// A postcondition that should hold by construction failed.
    #[error("internal consistency failure: {0}")]
    Internal(String),
    /// Idempotent splitting met an endomorphism without rational eigenvalues.
    #[error("splitting incomplete: {0}")]
    SplittingIncomplete(String),
}

pub type Result<T> = std::result::Result<T, Error>;
