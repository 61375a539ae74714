use thiserror::Error;

/// Errors raised by the geometry, dynamics and number-theory routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mixed numeric modes: {0} and {1}")]
    MixedMode(&'static str, &'static str),
    #[error("{what} = {value} lies outside the open interval (-2, 2)")]
    OutOfRange { what: &'static str, value: String },
    #[error("square root of {0} is irrational; needs float mode")]
    NeedsFloat(String),
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("rationality is undecidable in float mode")]
    FloatMode,
    #[error("budget must be positive")]
    InvalidBudget,
    #[error("point is fixed by the twist along {0}")]
    FixedPoint(&'static str),
    #[error("twist period check failed: expected order {expected}")]
    PeriodMismatch { expected: u64 },
    #[error("cyclotomic conductor {0} exceeds the guard")]
    ConductorOverflow(u64),
    #[error("search scale guard exceeded: {0}")]
    ScaleGuard(String),
    #[error("relation is not rationally valued")]
    NotRational,
    #[error("condition violated: {0}")]
    Condition(String),
    #[error("matrix determinant is {0}, expected 1")]
    NotUnimodular(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
