use thiserror::Error;

/// Errors raised by pattern construction and the operations built on top of it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,
    #[error("invalid token `{0}`: expected a nonzero integer")]
    InvalidToken(String),
    #[error("label {0} does not occur exactly once with each sign")]
    UnpairedLabel(i64),
    #[error("vertex rotation has a cycle of length {0}, expected 4")]
    NotFourValent(usize),
    #[error("position {0} is out of range for a word of length {1}")]
    PositionOutOfRange(usize, usize),
    #[error("positions {0} and {1} are sides of the same edge")]
    SameEdge(usize, usize),
    #[error("positions {0} and {1} are not intertwined")]
    NotIntertwined(usize, usize),
    #[error("no torus block starts at position {0}")]
    NotABlock(usize),
    #[error("vertices do not have the required types")]
    NotTyped,
    #[error("vertices are not adjacent")]
    NotAdjacent,
    #[error("genus {0} is too small for this operation")]
    GenusTooSmall(usize),
    #[error("genus {0} is outside the supported range")]
    UnsupportedGenus(usize),
    #[error("toral pattern without a splittable torus summand: {0}")]
    NoToralWitness(String),
    #[error("reduction made no progress on {0}")]
    ReductionStalled(String),
    #[error("integer overflow evaluating the rooted count for genus {0}")]
    Overflow(usize),
    #[error("graph level {0} is disconnected")]
    Disconnected(usize),
    #[error("necklace construction for genus {0} failed its signature check")]
    SignatureMismatch(usize),
    #[error("malformed graph document: {0}")]
    Malformed(String),
}

impl Error {
    /// Stable machine-readable identifier, used by the CLI on stderr.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyWord => "EmptyWord",
            Error::InvalidToken(_) => "InvalidToken",
            Error::UnpairedLabel(_) => "UnpairedLabel",
            Error::NotFourValent(_) => "NotFourValent",
            Error::PositionOutOfRange(..) => "PositionOutOfRange",
            Error::SameEdge(..) => "SameEdge",
            Error::NotIntertwined(..) => "NotIntertwined",
            Error::NotABlock(_) => "NotABlock",
            Error::NotTyped => "NotTyped",
            Error::NotAdjacent => "NotAdjacent",
            Error::GenusTooSmall(_) => "GenusTooSmall",
            Error::UnsupportedGenus(_) => "UnsupportedGenus",
            Error::NoToralWitness(_) => "NoToralWitness",
            Error::ReductionStalled(_) => "ReductionStalled",
            Error::Overflow(_) => "Overflow",
            Error::Disconnected(_) => "Disconnected",
            Error::SignatureMismatch(_) => "SignatureMismatch",
            Error::Malformed(_) => "Malformed",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
