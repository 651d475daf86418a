//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on user-supplied data failed.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Text input could not be parsed; `line` is 1-based.
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An exhaustive enumeration would exceed the configured budget.
    #[error("combinatorial budget exceeded: {count} patterns would be enumerated")]
    ResourceBudget { count: u128 },

    /// An identity the library guarantees failed to hold; signals a bug,
    /// not a bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    /// Independent evaluation routes disagreed beyond tolerance.
    #[error("cross-validation failure: spread {spread:e} exceeds tolerance {tolerance:e} (values {values:?})")]
    CrossValidation {
        spread: f64,
        tolerance: f64,
        values: Vec<f64>,
    },

    /// Evaluation requested too close to a pole or outside the domain.
    #[error("domain error: {0}")]
    Domain(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
