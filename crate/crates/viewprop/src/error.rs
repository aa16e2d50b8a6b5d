use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Arithmetic left the representable value range.
    #[error("value overflow")]
    Overflow,
    /// A model or operation referenced a variable of the wrong kind.
    #[error("variable kind mismatch")]
    KindMismatch,
    /// Unknown benchmark model name.
    #[error("unknown model: {0}")]
    UnknownModel(String),
}

pub type Result<T> = std::result::Result<T, Error>;
