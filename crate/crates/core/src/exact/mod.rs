//! Exact rational arithmetic, dense matrices, determinants and inverses.

mod det;
mod index;
mod matrix;
pub mod rational;

use thiserror::Error;

pub use det::{bareiss_det, Minors};
pub use index::IndexSet;
pub use matrix::{alternating_sign, backward_identity, checkerboard_conjugate, flip_rows, RMatrix};
pub use rational::{format_rational, int, parse_rational, ratio, Rational, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix has no rows")]
    Empty,
    #[error("row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("order mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{0}")]
    InvalidIndexSet(String),
    #[error("order {n} is below the minimum {min}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("matrix is singular")]
    Singular,
}
