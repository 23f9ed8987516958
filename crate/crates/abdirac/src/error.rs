//! Error type shared by the whole crate.
//!
//! The three variants map onto the CLI exit codes: usage errors exit with 2,
//! domain errors with 3 and accuracy errors with 4.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Caller misuse: mismatched geometries, unnormalized packets, bad flags.
    #[error("usage error: {0}")]
    Usage(String),

    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested evaluation cannot reach the required accuracy
    /// (for example an oscillatory integral on a too-coarse grid).
    #[error("accuracy error: {0}")]
    Accuracy(String),
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn accuracy(msg: impl Into<String>) -> Self {
        Error::Accuracy(msg.into())
    }

    /// Process exit code associated with this error kind.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 2,
            Error::Domain(_) => 3,
            Error::Accuracy(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
