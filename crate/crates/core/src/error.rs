use thiserror::Error;

/// Errors raised by element arithmetic, endomorphism algebra and the parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid parameters: {0}")]
    Validation(String),

    #[error("cannot factor through the shift: image {element} is outside its range")]
    Factoring { element: String },
}

impl Error {
    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Overflow(_) => "overflow",
            Error::Domain(_) => "domain",
            Error::Parse { .. } => "parse",
            Error::Validation(_) => "validation",
            Error::Factoring { .. } => "factoring",
        }
    }

    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
