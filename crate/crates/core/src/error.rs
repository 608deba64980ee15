use thiserror::Error;

use crate::ring::RElem;

/// Failures when reading the textual wire forms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid Z4 residue {0:?} (expected 0, 1, 2 or 3)")]
    BadZ4(String),
    #[error("invalid ring element {0:?} (expected \"a:b\" with a, b in 0..=3)")]
    BadRElem(String),
    #[error("invalid ideal label {0:?}")]
    BadIdealLabel(String),
    #[error("invalid bit string {0:?}")]
    BadBits(String),
    #[error("empty polynomial")]
    EmptyPoly,
    #[error("invalid generator expression {0:?}")]
    BadExpr(String),
    #[error("g{0} does not name a factor of x^n - 1")]
    BadFactorIndex(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0:?} is not a unit of R")]
    NotAUnit(RElem),
    #[error("divisor is not monic")]
    NonMonicDivisor,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("length {0} is even; only odd lengths are supported")]
    EvenLength(usize),
    #[error("length must be at least 1")]
    ZeroLength,
    #[error("length {0} exceeds the supported maximum of {max}", max = crate::cyclic::MAX_LENGTH)]
    LengthTooLarge(usize),
    #[error("polynomial does not divide x^{0} - 1")]
    NotADivisor(usize),
    #[error("Hensel lift verification failed: {0}")]
    LiftVerificationFailed(String),
    #[error("factors are not pairwise coprime")]
    NotCoprime,
    #[error("bad word length {0}: expected a positive multiple of 4")]
    BadLength(usize),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("module of 2^{bits} elements exceeds the enumeration cap of 2^{cap}")]
    TooLarge { bits: u32, cap: u32 },
    #[error("span is not closed under multiplication by 2 and u")]
    NotClosed,
    #[error("CRT profile has {got} entries but x^n - 1 has {expected} factors")]
    ProfileLengthMismatch { expected: usize, got: usize },
    #[error("divisibility chain violated: {0}")]
    DivisibilityViolated(String),
    #[error("no canonical generator form found")]
    NoCanonicalForm,
    #[error("{count} codes exceed the enumeration budget of {budget}")]
    BudgetExceeded { count: u128, budget: u128 },
    #[error("binary code set is not materialized")]
    NotMaterialized,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
