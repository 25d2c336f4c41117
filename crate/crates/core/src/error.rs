use thiserror::Error;

use crate::verdict::Witness;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("{what}: search space {size} exceeds the configured limit {limit}")]
    GuardExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("precondition failed: {law} does not hold ({witness})")]
    LawFails { law: String, witness: Box<Witness> },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn law(law: impl Into<String>, witness: Witness) -> Self {
        Error::LawFails {
            law: law.into(),
            witness: Box::new(witness),
        }
    }
}
