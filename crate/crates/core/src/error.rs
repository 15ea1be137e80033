use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failures raised by the pipelines.
///
/// Variants split into two classes: bad input (the weights, `k`, or prime
/// handed in cannot satisfy the hypotheses) and internal consistency
/// failures (two independent computations disagreed). See
/// [`Error::is_internal`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid divisor index {0}: indices must be at least 1")]
    InvalidIndex(i64),

    #[error("invalid divisor encoding: {0}")]
    InvalidEncoding(String),

    #[error("invalid weight system: {0}")]
    InvalidWeights(String),

    #[error("expected a weight system with {expected} variables, got {found}")]
    WrongArity { expected: usize, found: usize },

    #[error("weights do not bound a smooth curve: {0}")]
    NotSmoothCurve(String),

    #[error("divisor has non-integral coefficients ({0})")]
    NonIntegral(String),

    #[error("divisor has a pole of order {order} at t = 1")]
    PoleAtOne { order: u64 },

    #[error("divisor has negative coefficient sum {0}")]
    MalformedDivisor(String),

    #[error("divisor is not polynomial: cyclotomic factor Phi_{index} has exponent {exponent}")]
    NotAPolynomial { index: u64, exponent: String },

    #[error("gcd(degree {degree}, k {k}) = {gcd}; the cover requires coprime values")]
    NotCoprime { degree: u64, k: u64, gcd: u64 },

    #[error("k = {0} is out of range: the cover requires k > 1")]
    CoverRange(u64),

    #[error("{p} is not a family prime: {reason}")]
    FamilyDomain { p: u64, reason: String },

    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),

    #[error("cross-check failed: {0}")]
    CrossCheck(String),

    #[error("construction violated its guarantee: {0}")]
    TheoremViolation(String),
}

impl Error {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::InexactDivision(_) | Error::CrossCheck(_) | Error::TheoremViolation(_)
        )
    }
}
