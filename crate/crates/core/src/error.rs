use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation (index out of
    /// range, zero qubits, non-bijective map, width mismatch, ...).
    #[error("{0}")]
    Domain(String),

    /// The amplitude vector is not in a state the operation accepts.
    #[error("invalid state: {0}")]
    State(String),

    /// A configured resource cap would be exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// A document failed to parse or validate.
    #[error("{0}")]
    Parse(String),

    /// An internal consistency check failed.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}
