use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Fibonacci index must be at least 1")]
    ZeroFibIndex,
    #[error("index {0} must be even")]
    OddIndex(u64),
    #[error("{name} must be at least {min}, got {got}")]
    BelowMinimum {
        name: &'static str,
        min: u64,
        got: u64,
    },
    #[error("golden string positions start at 1")]
    ZeroPosition,
    #[error("word of length {0} is too short to drop two letters")]
    WordTooShort(usize),
    #[error("invalid letter {0:?}, expected 'A' or 'B'")]
    InvalidLetter(char),
    #[error("{0:?} is not a prefix of the golden string")]
    NotGoldenPrefix(String),
    #[error("coefficients {0:?} are not a valid Chung-Graham decomposition")]
    InvalidDecomposition(Vec<u8>),
    #[error("zero has no summands")]
    ZeroHasNoSummands,
    #[error("{name} = {got} exceeds the safety bound {bound}")]
    BoundExceeded {
        name: &'static str,
        got: String,
        bound: u64,
    },
    #[error("exhaustive enumeration is not a bijection: {0}")]
    BijectionViolated(String),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn at_least(name: &'static str, min: u64, got: u64) -> Result<()> {
    if got < min {
        return Err(Error::BelowMinimum { name, min, got });
    }
    Ok(())
}
