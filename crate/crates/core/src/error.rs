use thiserror::Error;

/// Errors produced by the layout library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed interchange document; `at` names the offending element.
    #[error("parse error at {at}: {msg}")]
    Parse { at: String, msg: String },
    #[error("invalid graph: {0}")]
    Graph(String),
    #[error("invalid ordering: {0}")]
    Ordering(String),
    #[error("invalid layout: {0}")]
    Layout(String),
    /// The input does not have the structure an operation requires.
    #[error("structure mismatch: {0}")]
    Structure(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
}

impl Error {
    pub(crate) fn parse(at: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Parse {
            at: at.into(),
            msg: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
