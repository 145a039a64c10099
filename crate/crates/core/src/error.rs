use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or inconsistent input (bad endpoint, loop, wrong structure).
    #[error("invalid input: {0}")]
    Input(String),

    /// An exhaustive routine was asked to run past its configured size limit.
    #[error("{what}: size {size} exceeds the exhaustive limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    /// An enumeration ran out of its work budget before finishing.
    #[error("{what}: enumeration budget of {budget} exhausted{hint}")]
    Budget {
        what: &'static str,
        budget: u64,
        hint: &'static str,
    },

    #[error("decode error: {0}")]
    Decode(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
