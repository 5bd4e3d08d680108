use std::fmt;

/// Errors produced by domain construction and the sorting operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SortError {
    /// The upper bound is below the lower bound.
    InvalidBounds { lower: i64, upper: i64 },
    /// The requested key domain has more slots than the configured budget.
    RangeTooLarge { size: u128, max_bits: u64 },
    /// A domain cannot be inferred from an empty key sequence.
    EmptyInput,
    /// A key fell outside the declared domain; `position` is its index in the input.
    KeyOutOfRange {
        key: i64,
        position: usize,
        lower: i64,
        upper: i64,
    },
    /// The same key appeared more than once in a unique-key sort.
    DuplicateKey { key: i64 },
    /// Decision strings over different domains cannot be combined.
    DomainMismatch,
    /// Worker count must be at least 1.
    InvalidWorkerCount,
}

impl fmt::Display for SortError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SortError::InvalidBounds { lower, upper } => {
                write!(f, "invalid bounds: upper {upper} is below lower {lower}")
            }
            SortError::RangeTooLarge { size, max_bits } => {
                write!(
                    f,
                    "key domain of size {size} exceeds the limit of {max_bits} slots"
                )
            }
            SortError::EmptyInput => write!(f, "cannot infer a domain from empty input"),
            SortError::KeyOutOfRange {
                key,
                position,
                lower,
                upper,
            } => write!(
                f,
                "key {key} at position {position} is outside the domain [{lower}, {upper}]"
            ),
            SortError::DuplicateKey { key } => {
                write!(f, "duplicate key {key} in unique-key sort")
            }
            SortError::DomainMismatch => write!(f, "decision strings have different domains"),
            SortError::InvalidWorkerCount => write!(f, "worker count must be at least 1"),
        }
    }
}

impl std::error::Error for SortError {}

/// Errors produced by the analytical cost model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelError {
    /// The exponent `a = ln k / ln n` is undefined for n < 2 or k < n.
    UndefinedExponent { n: u128, k: u128 },
    /// The hit probability n/k requires k >= n >= 1.
    InvalidRatio { n: u128, k: u128 },
    /// The parallel model assumes a power-of-two worker count.
    NonPowerOfTwoWorkers { workers: u64 },
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::UndefinedExponent { n, k } => {
                write!(f, "exponent is undefined for n = {n}, k = {k}")
            }
            ModelError::InvalidRatio { n, k } => {
                write!(
                    f,
                    "hit probability requires k >= n >= 1, got n = {n}, k = {k}"
                )
            }
            ModelError::NonPowerOfTwoWorkers { workers } => {
                write!(f, "worker count {workers} is not a power of two")
            }
        }
    }
}

impl std::error::Error for ModelError {}
