use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    Empty,

    #[error("generators must be positive integers")]
    ZeroGenerator,

    #[error("generators are not coprime (gcd = {0})")]
    NotPrimitive(u64),

    #[error("degenerate semigroup: the minimal generating system has a single generator")]
    Degenerate,

    #[error("cannot parse generator list: {0}")]
    Parse(String),

    #[error("embedding dimension {0} is too small, at least 3 generators are required")]
    EmbeddingDimensionTooSmall(usize),

    #[error("element {s} is below the bound N_S = {bound}")]
    BelowBound { s: u64, bound: u64 },

    #[error("{coords:?} is not a factorization of {s}")]
    NotAFactorization { s: u64, coords: Vec<u64> },

    #[error("n = {n} is below N0 = {n0}")]
    BelowN0 { n: u64, n0: u64 },

    #[error("window half-width is negative; the windowed algorithm does not apply")]
    NegativeWindow,

    #[error("n = {n} exceeds the evaluator capacity {capacity}")]
    BeyondCapacity { n: u64, capacity: u64 },

    #[error("n_max = {n_max} is smaller than the required N0 + 2*delta = {required}")]
    WindowTooSmall { n_max: u64, required: u64 },

    #[error("no divisor of {delta} is a period of the computed table")]
    NoPeriod { delta: u64 },

    #[error("fast and naive results differ at n = {n}: fast {fast:?}, naive {naive:?}")]
    Mismatch {
        n: u64,
        fast: Vec<u64>,
        naive: Vec<u64>,
    },

    #[error("time budget of {0} ms exceeded")]
    OverBudget(u64),

    #[error("integer overflow")]
    Overflow,
}
