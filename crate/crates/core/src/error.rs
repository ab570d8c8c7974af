use thiserror::Error;

use crate::Rational;

/// Errors raised by the exact-arithmetic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("pole at {point}: {context}")]
    Pole { point: Rational, context: String },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("division by the zero polynomial")]
    ZeroDenominator,

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("inconsistent result: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn pole(point: &Rational, context: impl Into<String>) -> Self {
        Error::Pole {
            point: point.clone(),
            context: context.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
