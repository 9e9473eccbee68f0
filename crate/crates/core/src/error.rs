use thiserror::Error;

/// Errors raised by graph construction, parsing, and the solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A caller supplied an argument outside the operation's domain.
    #[error("invalid input: {0}")]
    Input(String),

    /// A line of the edge-list text format could not be accepted.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A witness builder produced a family that failed verification.
    #[error("construction failed verification: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
