use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("linear coefficient is not a unit")]
    NonUnitLinear,
    #[error("series has a nonzero constant term")]
    NonzeroConstant,
    #[error("coefficient of degree {degree} is not integral: {value}")]
    NonIntegral { degree: usize, value: String },
    #[error("subgroup of order {sub} is not a subgroup of C{group}")]
    InvalidSubgroup { sub: u64, group: u64 },
    #[error("group order {0} is not a power of two")]
    NotPowerOfTwo(u64),
    #[error("cannot parse representation: {0}")]
    Parse(String),
    #[error("{0}")]
    OutOfRange(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("lift is not divisible by 2 after applying the trace")]
    NotTraceDivisible,
    #[error("spectral sequence mismatch: {0}")]
    ChartMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
