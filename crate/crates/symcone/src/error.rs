use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied argument is outside the operation's domain.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// An internal invariant was violated (corrupted state, inconsistent
    /// cross-checks). These indicate bugs or broken inputs, not bad calls.
    #[error("integrity violation: {0}")]
    Integrity(String),

    /// The requested evaluation method does not support the arguments.
    #[error("unsupported method: {0}")]
    Unsupported(String),

    /// The arguments are syntactically fine but numerically out of range
    /// (overflow, guard limits on problem size).
    #[error("out of range: {0}")]
    Range(String),

    /// Reading or writing a cache file failed.
    #[error("cache i/o: {0}")]
    CacheIo(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn integrity(msg: impl Into<String>) -> Self {
        Error::Integrity(msg.into())
    }

    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::Range(msg.into())
    }
}
