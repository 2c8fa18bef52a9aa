//! Exact rational linear algebra: matrices, row reduction, subspaces and
//! structure-constant algebras.
//!
//! Everything in this module is computed over arbitrary-precision rationals;
//! no floating point is used anywhere. Subspaces are kept in reduced
//! row-echelon form, so equality of subspaces is structural equality.

mod algebra;
mod matrix;
mod subspace;

pub use algebra::StructureAlgebra;
pub use matrix::Matrix;
pub use subspace::{sparse_from_dense, sparse_to_dense, SpanBuilder, SparseVec, Subspace};

use thiserror::Error;

/// Arbitrary-precision rational scalar. Always reduced, denominator positive.
pub type Rat = num::BigRational;

/// Rational from a numerator/denominator pair.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(numer.into(), denom.into())
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Renders a rational as `p/q` (or `p` when the denominator is 1).
pub fn rat_to_string(r: &Rat) -> String {
    r.to_string()
}

/// Parses `p/q` or `p`.
pub fn rat_from_string(s: &str) -> Result<Rat, LinalgError> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| LinalgError::BadScalar(format!("{s:?}: {e}")))
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("ragged rows: row {row} has length {got}, expected {expected}")]
    RaggedRows {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("the given subspace is not an ideal: closure adds {extra} new dimension(s)")]
    NotAnIdeal { extra: usize },
    #[error("vector does not lie in the subspace")]
    NotInSubspace,
    #[error("malformed algebra: {0}")]
    BadAlgebra(String),
    #[error("cannot parse rational from {0}")]
    BadScalar(String),
    #[error("matrix is singular")]
    Singular,
}
