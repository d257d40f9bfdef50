//! Library error type.

use crate::report::CheckReport;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("singular matrix")]
    SingularMatrix,

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid rational `{input}`: {reason}")]
    RationalSyntax { input: String, reason: String },

    #[error("structure constants of a Lie-kind algebra must be skew: violated at ({i},{j},{k})")]
    NotSkew { i: usize, j: usize, k: usize },

    #[error("precondition `{}` failed with {} violation(s)", .report.identity, .report.violations.len())]
    Precondition { report: CheckReport },

    #[error("ill-defined construction: {0}")]
    IllDefined(String),
}

impl Error {
    /// Wraps a failed precondition check.
    pub fn precondition(report: CheckReport) -> Self {
        Error::Precondition { report }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
