use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has zero constant term and cannot be inverted")]
    NonInvertible,
    #[error("1/(1 - q^0) is a pole")]
    ZeroExponent,
    #[error("exponent {0:?} lies outside the truncation box")]
    OutOfTruncation(Vec<u32>),
    #[error("infinite product with constant base never stabilizes")]
    NonTruncating,
    #[error("alphabet letters {0} and {1} coincide")]
    DegenerateAlphabet(usize, usize),
    #[error("cap {cap} for variable {var} exceeds the supported maximum {max}")]
    CapTooLarge { var: &'static str, cap: u32, max: u32 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("truncation too small: {0}")]
    TruncationTooSmall(String),
    #[error("unknown identity {0}")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
