use thiserror::Error;

/// Errors raised by every construction in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is not irreducible")]
    NotIrreducible(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("field of order {0} exceeds the supported table size")]
    FieldTooLarge(u128),
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("no element of order {n} in a field of order {q}")]
    NoSuchRoot { n: u64, q: u128 },
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },
    #[error("coefficient of a minimal polynomial does not lie in the base field")]
    CoefficientNotInBaseField,
    #[error("generator polynomial does not divide X^{0} - 1")]
    NotADivisor(usize),
    #[error("component of degree {degree} does not fit below {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("message component {index} has degree {degree}, must be below {bound}")]
    MessageDegreeTooLarge {
        index: usize,
        degree: usize,
        bound: usize,
    },
    #[error("diagonal entries equal to X^m - 1 do not form a suffix")]
    NonPrefixPattern,
    #[error("index ({i}, {j}) out of range")]
    IndexOutOfRange { i: usize, j: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parameter mismatch: {0}")]
    ParamMismatch(String),
    #[error("code is {0}-level, expected 1-level")]
    NotOneLevel(usize),
    #[error("expanded generator has rank {rank}, dimension formula gives {expected}")]
    RankMismatch { rank: usize, expected: usize },
    #[error("enumeration of {count} messages exceeds the guard {guard}")]
    TooLarge { count: u128, guard: u128 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
