use thiserror::Error;

/// Errors produced by the library.
///
/// Variants split into two groups: caller mistakes (bad arguments, malformed
/// input text) and domain outcomes (a deck that no graph can produce, a
/// reconstruction whose result fails its own check). The CLI maps the first
/// group to exit code 2 and the second to exit code 1.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("size mismatch: expected {expected} vertices, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("resource guard: {0}")]
    ResourceGuard(String),

    #[error("malformed deck: {0}")]
    MalformedDeck(String),

    #[error("illegitimate deck: {0}")]
    IllegitimateDeck(String),

    #[error("reconstruction failed: {0}")]
    ReconstructionFailed(String),

    #[error("deck is outside the requested class: {0}")]
    NotInClass(String),

    #[error("weights are not pairwise distinct: {0}")]
    Genericity(String),

    #[error("invalid cards: {0}")]
    InvalidCards(String),

    #[error("count mismatch between orbit-sum and brute-force routes: {orbit} vs {brute}")]
    CountMismatch { orbit: u64, brute: u64 },
}

impl Error {
    /// True for outcomes about the mathematical object rather than the request.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::MalformedDeck(_)
                | Error::IllegitimateDeck(_)
                | Error::ReconstructionFailed(_)
                | Error::NotInClass(_)
                | Error::Genericity(_)
                | Error::InvalidCards(_)
                | Error::CountMismatch { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
