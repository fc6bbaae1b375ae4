use thiserror::Error;

/// Errors raised by the algebraic layers.
///
/// Two variants carry a mathematical verdict rather than a usage problem:
/// [`Error::NonIntegral`] and [`Error::Infeasible`]. Callers that sweep
/// parameters can tell them apart with [`Error::is_verdict`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("group mismatch: {left} vs {right}")]
    GroupMismatch { left: String, right: String },
    #[error("dimension mismatch: g = {0} vs g = {1}")]
    DimensionMismatch(usize, usize),
    #[error("root system mismatch: {0} vs {1}")]
    RootSystemMismatch(String, String),
    #[error("truncation index {d} not allowed: {reason}")]
    Truncation { d: usize, reason: String },
    #[error("result is not integral: {0}")]
    NonIntegral(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("hypothesis flag `{0}` is required but not set")]
    MissingHypothesis(&'static str),
    #[error("cycle has no fiber model")]
    MissingFiber,
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("unknown Dynkin type `{0}`")]
    UnknownType(String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True when the error is a mathematical "no" rather than bad input.
    pub fn is_verdict(&self) -> bool {
        matches!(self, Error::NonIntegral(_) | Error::Infeasible(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
