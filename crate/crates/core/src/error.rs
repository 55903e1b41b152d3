use thiserror::Error;

/// Errors raised by the library. Each variant maps onto one CLI exit class.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A documented size cap was exceeded. Never silently truncated.
    #[error("capacity refused: {0}")]
    CapacityRefused(String),

    /// A computation produced a value that contradicts an arithmetic invariant.
    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: unsupported input: {message}")]
    Unsupported { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub(crate) fn capacity(msg: impl Into<String>) -> Error {
    Error::CapacityRefused(msg.into())
}
