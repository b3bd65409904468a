use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A request exceeded the configured size guard.
    #[error("n = {n} exceeds the configured maximum {max}")]
    ResourceGuard { n: usize, max: usize },

    /// An operation was called outside its precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A class function had a non-integral multiplicity against some irreducible.
    #[error("not a virtual character: non-integral multiplicity at {0}")]
    NotVirtualCharacter(String),

    /// An internal identity failed (parity, non-negativity, orthonormality, ...).
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("cache error at {path}: {reason}")]
    Cache { path: String, reason: String },

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn contract(msg: impl Into<String>) -> Error {
    Error::Contract(msg.into())
}
