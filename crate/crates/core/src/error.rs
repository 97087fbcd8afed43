use std::io;

use thiserror::Error;

/// Errors raised by the engine.
///
/// `Internal` always signals a bug upstream (an exactness or consistency
/// check that cannot fail on correct input); it is never caused by user data.
#[derive(Debug, Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),

    #[error("refused: {0}")]
    Refused(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("cache invalid: {0}")]
    CacheInvalid(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}
