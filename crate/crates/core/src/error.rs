use thiserror::Error;

/// Errors raised by the algebra layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("variable count mismatch: {0} vs {1}")]
    VarCountMismatch(usize, usize),
    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { got: usize, max: usize },
    #[error("ring mismatch")]
    RingMismatch,
    #[error("rank or twist mismatch: {0}")]
    ShapeMismatch(String),
    #[error("map is not homogeneous at entry ({row}, {col})")]
    NotHomogeneous { row: usize, col: usize },
    #[error("input is not homogeneous")]
    Inhomogeneous,
    #[error("generators live in several degrees")]
    MixedDegrees,
    #[error("ideal is not m-primary")]
    NotMPrimary,
    #[error("ideal is zero")]
    ZeroIdeal,
    #[error("entry is not a linear form")]
    NonLinear,
    #[error("characteristic 2 is excluded here")]
    CharTwo,
    #[error("the quadratic form is zero")]
    ZeroForm,
    #[error("first ideal is not contained in the second")]
    NotContained,
    #[error("module does not have finite length")]
    InfiniteLength,
    #[error("ill-defined map: relations are not respected")]
    IllDefinedMap,
    #[error("p + q must equal n - j + k ({expected}), got {got}")]
    IndexConstraint { expected: i64, got: i64 },
    #[error("negative index {0}")]
    NegativeIndex(i64),
    #[error("requested {k} linear forms in {n} variables")]
    TooManyForms { k: usize, n: usize },
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no suitable random instance after {0} attempts")]
    RetriesExhausted(usize),
    #[error("ring B is not Cohen-Macaulay")]
    NotCohenMacaulay,
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
