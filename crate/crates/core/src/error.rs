use std::io;

use thiserror::Error;

/// Errors raised by the engine, the arithmetic layer and the verifiers.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A configured ceiling (memory, prime-count range, enumeration guard) was hit.
    #[error("resource limit: {0}")]
    Resource(String),

    /// A certified comparison could not be resolved at the available precision.
    #[error("precision error: {0}")]
    Precision(String),

    /// Root bracketing failed to find a sign change.
    #[error("no root: {0}")]
    NoRoot(String),

    #[error("unknown inequality id `{id}`; valid ids: {valid}")]
    UnknownSpec { id: String, valid: String },

    #[error("prime cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn resource<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Resource(msg.into()))
}
