use thiserror::Error;

use crate::scalar::Scalar;

/// Which of the invariant-form requirements failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormCondition {
    /// `<d a, b> + (-1)^{|a|} <a, d b> = 0`
    DifferentialInvariance,
    /// `<a, b> = (-1)^{|a|} <b, a>`
    GradedSymmetry,
    /// `<[a, b], c> = <a, [b, c]>`
    Invariance,
    /// `<a, b> != 0` only when `|a| + |b| = 4N`
    DegreeSupport,
}

impl std::fmt::Display for FormCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FormCondition::DifferentialInvariance => "d-invariance",
            FormCondition::GradedSymmetry => "graded symmetry",
            FormCondition::Invariance => "invariance",
            FormCondition::DegreeSupport => "degree support",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid rational literal {0:?} (expected \"p\" or \"p/q\")")]
    InvalidScalar(String),
    #[error("malformed presentation: {0}")]
    Parse(String),
    #[error("duplicate id {0:?}")]
    DuplicateId(String),
    #[error("unknown id {0:?}")]
    UnknownId(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("degree mismatch in {context}: expected {expected}, found {found}")]
    DegreeMismatch { context: String, expected: i64, found: i64 },
    #[error("weight mismatch in {context}: expected {expected}, found {found}")]
    WeightMismatch { context: String, expected: Scalar, found: Scalar },
    #[error("truncation violation in {0}: the product index exceeds the weight bound")]
    TruncationViolation(String),
    #[error("differential does not square to zero on {0:?}")]
    DifferentialNotSquareZero(String),
    #[error("generator {0:?} has non-positive weight but takes part in products or an envelope")]
    NonPositiveWeight(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("generator {0:?} has odd degree; the functor needs an even dg Lie algebra")]
    OddGenerator(String),
    #[error("invalid dg Lie algebra: {0}")]
    InvalidDgLie(String),
    #[error("{0} is not in the negative part (every mode index must be <= -1)")]
    NotInMinusPart(String),
    #[error("no level given for central {0:?}")]
    MissingLevel(String),
    #[error("invalid level: {0}")]
    InvalidLevel(String),
    #[error("invalid weight cap {0}: the cap must be non-negative")]
    InvalidCap(Scalar),
    #[error("weight {weight} exceeds the cap {cap}; raise the weight cap")]
    WeightOverflow { weight: Scalar, cap: Scalar },
    #[error("no locality order up to {0} on the probed window")]
    WindowExceeded(u32),
    #[error("bilinear form violates {condition}: {detail}")]
    FormInvariantViolation { condition: FormCondition, detail: String },
    #[error("the Casimir does not act on the adjoint representation as a scalar")]
    NotScalar,
    #[error("the bilinear form is degenerate")]
    Degenerate,
    #[error("level {0} is critical (k = -h^vee)")]
    CriticalLevel(Scalar),
}
