use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A caller-supplied value violates a precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An operation was applied outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested quantity is undefined for these code parameters.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// A configured budget (cost, state space) would be exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// Decoding did not produce a result.
    #[error("decoding failed: {0}")]
    Decode(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
