use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message} at column {column}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: unknown generator name '{name}'")]
    UnknownGenerator { line: usize, name: String },
    #[error("line {line}: minimal polynomial of '{name}' is not monic in '{name}'")]
    NonMonic { line: usize, name: String },
    #[error("line {line}: defining polynomial of '{name}' is reducible (factor {witness})")]
    Reducible {
        line: usize,
        name: String,
        witness: String,
    },
    #[error("line {line}: {message}")]
    Tower { line: usize, message: String },
    #[error("{0} is not a prime below 2^31")]
    InvalidModulus(u64),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("operation needs a nonconstant polynomial")]
    ConstantPolynomial,
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("matrix size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("roots not separated at {bits} bits of precision")]
    InsufficientPrecision { bits: u32 },
    #[error("precision cap of {cap} bits reached with {pending} uncertified automorphism candidate(s)")]
    PrecisionExhausted { cap: u32, pending: usize },
    #[error("group of order {order} exceeds the subgroup cap {cap}")]
    SubgroupCap { order: usize, cap: usize },
    #[error("primitive element search exhausted its budget of {budget} candidates")]
    PrimitiveSearch { budget: usize },
    #[error("subfield is not stable under the automorphism group")]
    NotStable,
    #[error("no invertible intertwiner found within {budget} candidates")]
    ConjugatorBudget { budget: usize },
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
