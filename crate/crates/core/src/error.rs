use thiserror::Error;

/// Errors raised by fusionkit computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid context: N = {n}, k = {k} (need N >= 2, k >= 1)")]
    InvalidContext { n: usize, k: usize },

    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    #[error("parts are not weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),

    #[error("inner partition {inner:?} is not contained in outer partition {outer:?}")]
    NotContained { outer: Vec<usize>, inner: Vec<usize> },

    #[error("partition {partition:?} does not fit inside the {rows}x{cols} box")]
    OutsideBox { partition: Vec<usize>, rows: usize, cols: usize },

    #[error("weight {weight:?} has level {level}, exceeding k = {k}")]
    LevelOverflow { weight: Vec<usize>, level: usize, k: usize },

    #[error("weight {weight:?} has {got} coefficients, expected {expected}")]
    WeightArity { weight: Vec<usize>, got: usize, expected: usize },

    #[error("residue {value} is out of range for modulus {modulus}")]
    ResidueOutOfRange { value: usize, modulus: usize },

    #[error("skew shape has {shape} boxes but the content has {content}")]
    SizeMismatch { shape: usize, content: usize },

    #[error("strip size {m} exceeds the bound {bound}")]
    StripTooLarge { m: usize, bound: usize },

    #[error("{what} limit exceeded: {got} > {limit}")]
    TooLarge { what: &'static str, got: usize, limit: usize },

    #[error("orbit {0:?} has no zero entry")]
    NoZeroEntry(Vec<usize>),

    #[error("label {label} out of range 0..={k}")]
    LabelOutOfRange { label: usize, k: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("quotient product depends on the representative: {0}")]
    IllDefinedQuotient(String),

    #[error("parse error at {token:?}: expected {expected}")]
    Parse { token: String, expected: &'static str },

    #[error("table format error: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
