use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Malformed graph6 input. `offset` is the byte index of the first bad byte.
    #[error("graph6 format error at byte {offset}: {message}")]
    Format { offset: usize, message: String },

    /// A constructor or operation was called outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The eigensolver or the exact/floating inertia cross-check failed.
    #[error("numeric error after {iterations} sweeps: {message}")]
    Numeric { message: String, iterations: usize },

    /// A search or enumeration budget was exceeded.
    #[error("resource limit: {0}")]
    Resource(String),

    /// A graph6 stream line failed to decode; `line` is 1-based.
    #[error("input line {line}: {message}")]
    Input { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),

    /// Self-check failure in built-in data (e.g. the P(2) catalog).
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn format(offset: usize, message: impl Into<String>) -> Self {
        Error::Format { offset, message: message.into() }
    }

    pub(crate) fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
