use thiserror::Error;

use crate::foliation::FieldIssue;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("operation undefined on the zero polynomial: {0}")]
    ZeroPolynomial(&'static str),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("matrix is not square ({rows} rows, row {row} has {cols} entries)")]
    NonSquare {
        rows: usize,
        row: usize,
        cols: usize,
    },

    #[error("polynomial is constant in variable z{0}")]
    ConstantInVariable(usize),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("problem file line {line}: {message}")]
    ProblemFile { line: usize, message: String },

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("weights mismatch: {0}")]
    WeightsMismatch(String),

    #[error("polynomial is not quasi-homogeneous: {0}")]
    NotQuasiHomogeneous(String),

    #[error("invalid vector field: {}", format_issues(.0))]
    InvalidField(Vec<FieldIssue>),

    #[error("invalid one-form: {0}")]
    InvalidForm(String),

    #[error("wrong dimension: expected {expected} homogeneous coordinates, got {got}")]
    WrongDimension { expected: usize, got: usize },

    #[error("degenerate linear system: {0}")]
    DegenerateSystem(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

fn format_issues(issues: &[FieldIssue]) -> String {
    issues
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
