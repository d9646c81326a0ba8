use thiserror::Error;

/// Errors raised by the arithmetic, construction and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op}: argument must be positive")]
    ZeroArgument { op: &'static str },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("operands belong to different fields")]
    MixedFields,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("zero has no multiplicative inverse")]
    InversionOfZero,

    #[error("element index {index} out of range for a field of size {size}")]
    IndexOutOfRange { index: u64, size: u64 },

    #[error("{op}: modulus must have degree at least 1")]
    ConstantModulus { op: &'static str },

    #[error("{op}: polynomial must be monic")]
    NotMonic { op: &'static str },

    #[error("{op}: polynomial must be nonconstant")]
    ConstantPolynomial { op: &'static str },

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("modulus is reducible{}", witness.as_ref().map(|w| format!(" (divisible by {w})")).unwrap_or_default())]
    ReducibleModulus { witness: Option<String> },

    #[error("{what}: needs {needed}, budget is {limit}")]
    BudgetExceeded {
        what: &'static str,
        needed: String,
        limit: u64,
    },

    #[error("{0}: integer overflow")]
    Overflow(&'static str),

    #[error("census does not cover degree {degree}")]
    IncompleteCensus { degree: u64 },

    #[error("census polynomials for degree {degree} were not retained")]
    CensusListMissing { degree: u64 },

    #[error("series must have constant term 1")]
    NonUnitConstantTerm,

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
