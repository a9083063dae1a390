use thiserror::Error;

use crate::tableaux::Violation;

/// Why a `(n, d, i, j)` quadruple is not a Schubert datum.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("bad dimensions: {0}")]
    BadDimensions(String),
    #[error("{name} is not strictly increasing at position {position}")]
    NotStrictlyIncreasing { name: char, position: usize },
    #[error("{name}_{position} = {value} lies outside [1, {n}]")]
    OutOfRange {
        name: char,
        position: usize,
        value: i64,
        n: i64,
    },
    #[error("j is not dominated by i: j_{position} = {j} > i_{position} = {i}")]
    NotDominated { position: usize, i: i64, j: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Invalid(#[from] ValidationError),
    #[error("matrix is not square")]
    NotSquare,
    #[error("cofactor expansion refused for order {order} (max {max})")]
    SizeGuard { order: usize, max: usize },
    #[error("only defined for j = (1, 2, ..., d)")]
    NotSpecialCase,
    #[error("method {method} is inapplicable: {reason}")]
    MethodInapplicable { method: String, reason: String },
    #[error("methods disagree: {}", format_values(.0))]
    DisagreementDetected(Vec<(String, String)>),
    #[error("enumeration work {work} exceeds guard {guard}")]
    GuardExceeded { work: String, guard: u64 },
    #[error("invalid path family: {0}")]
    FamilyInvalid(String),
    #[error("tableau shape is degenerate for d < 2")]
    DegenerateShape,
    #[error("array violates property {0}")]
    ArrayInvalid(Violation),
    #[error("no path family maps to this array: {0}")]
    NoPreimage(String),
    #[error("index {index} out of range ({count} objects)")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

fn format_values(values: &[(String, String)]) -> String {
    values
        .iter()
        .map(|(m, v)| format!("{m}={v}"))
        .collect::<Vec<_>>()
        .join(", ")
}
