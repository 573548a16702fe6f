use thiserror::Error;

use crate::word::Word;

/// Errors raised by word analysis operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid character {ch:?} at position {pos}: words are made of ASCII letters")]
    Parse { ch: char, pos: usize },
    #[error("operation requires a non-empty word")]
    EmptyWord,
    #[error("pattern must be non-empty")]
    EmptyPattern,
    #[error("\"{0}\" is not a factor of the word")]
    NotAFactor(Word),
    #[error("operation requires at least two distinct letters")]
    AlphabetTooSmall,
    #[error("\"{0}\" is not a generalized trapezoidal word")]
    NotGt(Word),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("enumeration bounds violated: {0}")]
    Bounds(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
