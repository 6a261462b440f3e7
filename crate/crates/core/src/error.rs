use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("extension degree must be at least 1")]
    InvalidDegree,
    #[error("polynomial is reducible over F_{0}")]
    Reducible(BigUint),
    #[error("polynomial must be monic of degree {expected}")]
    MalformedPolynomial { expected: usize },
    #[error("structure constants do not define a field: {0}")]
    NotAField(String),
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("element does not belong to this field")]
    FieldMismatch,

    #[error("string length {found} does not match box length {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("dimension must be at least 1")]
    InvalidDimension,
    #[error("generator {0} is singular")]
    SingularGenerator(usize),
    #[error("operation requires a global exponent")]
    MissingExponent,
    #[error("seed list is empty")]
    EmptySeeds,

    #[error("exponent does not annihilate the element")]
    WrongExponent,
    #[error("incomplete factorization of {0}")]
    IncompleteFactorization(BigUint),
    #[error("even order {0}")]
    EvenOrder(BigUint),
    #[error("not an involution")]
    NotInvolution,
    #[error("budget exhausted: {0}")]
    BudgetExhausted(&'static str),

    #[error("tuples must all have length {expected}")]
    RaggedTuples { expected: usize },
    #[error("automorphism order must be at least 1")]
    InvalidOrder,
    #[error("no local data supplied")]
    EmptyLocals,
    #[error("evaluator failed: {0}")]
    Evaluator(String),

    #[error("extension degree k must exceed 1, got {0}")]
    DegreeTooSmall(u32),
    #[error("odd characteristic required, got {0}")]
    EvenCharacteristic(BigUint),
    #[error("odd q required, got {0}")]
    EvenQ(BigUint),
    #[error("invalid Curtis-Tits datum: {0}")]
    InvalidDatum(String),

    #[error("{0} lies outside the prime subfield")]
    NotInPrimeSubfield(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("modulus must be odd and at least 3, got {0}")]
    EvenModulus(BigUint),

    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
