//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors raised by the combinatorial operations.
///
/// `Integrity` signals that an arithmetic identity which is a theorem
/// (an exact division, a divisibility) failed to hold; it always
/// indicates a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integrity violation: {0}")]
    Integrity(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("not a Dumont permutation")]
    NotDumont,

    #[error("invalid Dellac configuration: {0}")]
    InvalidConfig(String),

    #[error("configuration not switchable at {0}")]
    NotSwitchable(usize),

    #[error("invalid Dellac history: {0}")]
    InvalidHistory(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
