use thiserror::Error;

/// Errors raised by the field, algebra and code layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u32 },
    #[error("modulus must be monic of degree {expected}")]
    BadModulus { expected: usize },
    #[error("{0} does not fit the supported integer width")]
    Overflow(String),
    #[error("gcd(n, q) must be 1 (n = {n}, q = {q})")]
    GcdViolation { n: usize, q: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("element is not in component A_{0}")]
    NotInComponent(usize),
    #[error("component A_{0} is not a paired block")]
    NotPaired(usize),
    #[error("g = \u{b1}2 admits no norm-equation solution of the required form")]
    DegenerateG,
    #[error("two parts target the same block A_{0}")]
    BlockCollision(usize),
    #[error("no parts given")]
    EmptyParts,
    #[error("invalid twist: {0}")]
    InvalidBeta(String),
    #[error("hypothesis unmet: {0}")]
    HypothesisUnmet(String),
    #[error("budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("code has no nonzero codewords")]
    NoNonzeroWords,
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("subspace is not a left ideal")]
    NotLeftIdeal,
    #[error("generator (a, b) = (0, 0)")]
    ZeroGenerator,
    #[error("no twist with relative distance above {0} found")]
    NoneFound(f64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
