use thiserror::Error;

/// Errors raised by the exact engine. The kebab-case tags are stable and
/// scripts may match on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("unsupported-negative-upper: C({n}, {k}) has a negative upper index")]
    UnsupportedNegativeUpper { n: i64, k: i64 },

    #[error("pochhammer-pole: ({alpha})_{m} divides by zero")]
    PochhammerPole { alpha: String, m: i64 },

    #[error("duplicate-node: abscissa {0} appears twice")]
    DuplicateNode(String),

    #[error("no-proved-degree-plan: {0}")]
    NoProvedDegreePlan(String),

    #[error("invalid-spec: {0}")]
    InvalidSpec(String),

    #[error("dimension-mismatch: {0}")]
    DimensionMismatch(String),

    #[error("parse: {0}")]
    Parse(String),
}
