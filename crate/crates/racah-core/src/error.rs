//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("factor count mismatch: left element lives in {left} factors, right in {right}")]
    FactorCountMismatch { left: usize, right: usize },

    #[error("factor index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("indices {0:?} must be pairwise distinct")]
    RepeatedIndices(Vec<usize>),

    #[error("polarized trace needs at least two factor indices, got {0}")]
    TraceTooShort(usize),

    #[error("symmetrized determinant needs a square matrix, got {rows}x{cols}")]
    NonSquareMatrix { rows: usize, cols: usize },

    #[error("{tag} needs at least {needed} distinct indices, but n = {n}")]
    InsufficientIndices {
        tag: &'static str,
        needed: usize,
        n: usize,
    },

    #[error("unsupported n = {n}; supported values: {supported}")]
    UnsupportedN { n: usize, supported: &'static str },

    #[error("resource budget exceeded: needed {needed}, budget {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },

    #[error("non-integer coefficient encountered: {0}")]
    NonIntegerCoefficient(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
