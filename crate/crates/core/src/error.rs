use thiserror::Error;

/// Crate-wide error type. `Input` marks malformed caller data (the CLI maps
/// it to exit code 2); `Internal` marks a violated cross-check, which is a
/// bug, never a data problem.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
