use thiserror::Error;

use crate::poly::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("modulus {0:?} is reducible over the prime field")]
    ReducibleModulus(Vec<u64>),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("generator matrix has rank {rank} but {rows} rows")]
    RankDeficientGenerator { rank: usize, rows: usize },
    #[error("column {0} of the generator matrix is zero")]
    ZeroColumn(usize),
    #[error("code length {0} exceeds the supported maximum of 128")]
    LengthTooLarge(usize),
    #[error("index set is not saturated")]
    NotSaturated,
    #[error("index set is not a flat of this lattice")]
    NotAFlat,
    #[error("index sets are not comparable under inclusion")]
    NotComparable,
    #[error("dual of a code of full dimension is the zero code")]
    DimensionZeroDual,
    #[error("incompatible characteristic: {0}")]
    IncompatibleCharacteristic(String),
    #[error("budget of {limit} exceeded")]
    BudgetExceeded { limit: u64 },
    #[error("polynomial coefficients are not divisible by q^{0}")]
    NotDivisible(u32),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("reduction modulo {prime} dropped the rank")]
    RankDropped { prime: u64 },
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
