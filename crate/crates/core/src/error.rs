use std::fmt;

use thiserror::Error;

/// Errors raised by the exact kernels and the identity checks built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division leaves a remainder or a non-integral quotient")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not a perfect square: {0}")]
    NotASquare(&'static str),
    #[error("series has zero constant term and no multiplicative inverse")]
    ConstantTermZero,
    #[error("inner series of a composition must have zero constant term")]
    InnerConstantNonzero,
    #[error("binomial lower index must be nonnegative, got {0}")]
    NegativeK(i64),
    #[error("Fuss-Catalan denominator m*p + r vanishes for m = {m}")]
    DegenerateDenominator { m: u64 },
    #[error("index ({i}, {j}) lies outside the triangle")]
    OutOfTriangle { i: i64, j: i64 },
    #[error("expected an integer coefficient, found {0}")]
    NonIntegerCoefficient(String),
    #[error("series is not compositionally invertible (f(0) != 0 or f'(0) = 0)")]
    NotInvertible,
    #[error("Riordan array is not proper (g(0) = 0)")]
    NotProper,
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("expected a real value, imaginary part is {0}")]
    NotReal(String),
    #[error("conjecture violated at n = {n}: {what}")]
    ConjectureViolation { n: u64, what: String },
    #[error(transparent)]
    CheckFailed(#[from] CheckFailed),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// First counterexample found by an identity check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct CheckFailed {
    /// Short name of the identity being checked.
    pub check: String,
    /// Where the mismatch was found (a monomial, a matrix entry, an index).
    pub location: String,
    pub expected: String,
    pub actual: String,
}

impl CheckFailed {
    pub fn new(
        check: impl Into<String>,
        location: impl Into<String>,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) -> Self {
        CheckFailed {
            check: check.into(),
            location: location.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

impl fmt::Display for CheckFailed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} failed at {}: expected {}, got {}",
            self.check, self.location, self.expected, self.actual
        )
    }
}

/// Summary of a passing identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    /// Number of elementary comparisons (coefficients, entries, cases) performed.
    pub comparisons: usize,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, comparisons: usize) -> Self {
        CheckReport {
            check: check.into(),
            comparisons,
        }
    }

    /// Folds another report into this one, keeping this report's name.
    pub fn absorb(mut self, other: CheckReport) -> Self {
        self.comparisons += other.comparisons;
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} comparisons ok", self.check, self.comparisons)
    }
}

pub type CheckResult = std::result::Result<CheckReport, CheckFailed>;
