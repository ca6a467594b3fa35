use thiserror::Error;

use crate::monoid::MonoidId;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("tropical overflow: finite value exceeds the guard magnitude")]
    Overflow,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),
    #[error("unknown letter '{letter}' (alphabet is {alphabet})")]
    UnknownLetter { letter: char, alphabet: String },
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("more than one relation given; only one-relation presentations are accepted")]
    MultipleRelations,
    #[error("rewriting did not terminate within {0} steps")]
    StepBudgetExceeded(usize),
    #[error("no model is available for {0}")]
    UnsupportedModel(MonoidId),
    #[error("no representation is available for {0}")]
    UnsupportedRepresentation(MonoidId),
    #[error("element {element} is not of the form used by {monoid}")]
    WrongElement { monoid: MonoidId, element: String },
    #[error("element {element} of {monoid} is not the image of any word")]
    NoCanonicalWord { monoid: MonoidId, element: String },
    #[error("invalid monoid parameters: {0}")]
    InvalidParameters(String),
    #[error("unknown identity '{0}'")]
    UnknownIdentity(String),
    #[error("word too long: {0} letters exceeds the length guard")]
    WordTooLong(u128),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
