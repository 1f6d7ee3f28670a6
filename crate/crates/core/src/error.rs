use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed text encoding. `offset` is a byte offset into the input.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Well-formed input that violates a structural invariant (loop, duplicate edge, ...).
    #[error("validation error: {0}")]
    Validation(String),

    #[error("invalid parameter: {0}")]
    Param(String),

    /// An exact solver was asked to work above its configured size cap.
    #[error("{what}: size {actual} exceeds cap {limit}")]
    Cap {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    /// A search ran out of its node budget before reaching a definitive answer.
    #[error("{what}: search budget of {limit} nodes exhausted")]
    Budget { what: &'static str, limit: u64 },

    #[error("invalid input: {0}")]
    Input(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::Cap { what, limit, actual }
    }

    pub(crate) fn check_cap(what: &'static str, limit: usize, actual: usize) -> Result<()> {
        if actual > limit {
            Err(Error::cap(what, limit, actual))
        } else {
            Ok(())
        }
    }
}
