use thiserror::Error;

/// Errors raised by the algebra, enumeration and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("out of range: {0}")]
    Range(String),
    /// The request is well formed but too large for exhaustive treatment.
    #[error("capacity exceeded: {what} supports n <= {limit}, requested {requested}")]
    Capacity {
        what: String,
        limit: u64,
        requested: u64,
    },
    #[error("usage error: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid object: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn capacity(what: impl Into<String>, limit: u64, requested: u64) -> Error {
    Error::Capacity {
        what: what.into(),
        limit,
        requested,
    }
}
