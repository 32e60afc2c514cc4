use std::io;

use thiserror::Error;

/// Every failure the toolkit can report.
///
/// The variants map onto process exit codes through [`Error::exit_code`]:
/// invalid requests are 2, failed internal consistency checks are 3 and
/// I/O trouble is 4.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    Precondition(String),
    #[error("inconsistency: {0}")]
    Inconsistency(String),
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error("malformed record at line {line}: {message}")]
    Record { line: usize, message: String },
    #[error("checkpoint error: {0}")]
    Checkpoint(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn inconsistency(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Precondition(_) => 2,
            Error::Inconsistency(_) => 3,
            Error::Io(_) | Error::Record { .. } | Error::Checkpoint(_) => 4,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Record { line: e.line(), message: e.to_string() }
    }
}
