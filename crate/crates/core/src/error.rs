//! Error taxonomy shared by every module of the crate.

use std::fmt;

/// Everything that can go wrong while parsing or analyzing a problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input is structurally unusable for the requested operation
    /// (zero polynomial, missing variable, degree 0 in the elimination
    /// variable, ...).
    DegenerateInput(String),
    /// Exact division by the zero polynomial was requested.
    ZeroDivisor,
    /// The problem text does not conform to the grammar.
    Syntax {
        /// Byte offset into the input.
        pos: usize,
        line: usize,
        col: usize,
        expected: String,
        found: String,
    },
    /// More than two distinct variable names appear in the input.
    MixedVariables { var: String, pos: usize },
    /// Both inputs are divisible by a power of the elimination variable,
    /// so the resultant vanishes identically.
    DegenerateSharedFactor { var: String },
    /// The two determinant backends disagreed; this is an implementation
    /// bug, never a property of the input.
    MethodMismatch,
    /// An internal consistency check failed (hull bug, non-integer degree,
    /// disagreeing genericized degrees).
    InternalInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegenerateInput(msg) => write!(f, "degenerate input: {msg}"),
            Error::ZeroDivisor => write!(f, "division by the zero polynomial"),
            Error::Syntax {
                line,
                col,
                expected,
                found,
                ..
            } => write!(
                f,
                "syntax error at line {line}, column {col}: expected {expected}, found {found}"
            ),
            Error::MixedVariables { var, pos } => write!(
                f,
                "more than two variable names appear (third name `{var}` at byte {pos})"
            ),
            Error::DegenerateSharedFactor { var } => write!(
                f,
                "resultant vanishes identically: common factor {var} divides both inputs"
            ),
            Error::MethodMismatch => {
                write!(f, "determinant backends disagree (implementation bug)")
            }
            Error::InternalInvariant(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
