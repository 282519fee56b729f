//! Exact sparse linear algebra over `Q` and prime fields.
//!
//! Everything downstream reduces to ranks, kernels and span membership of
//! sparse matrices, so this module keeps a small surface: [`Scalar`],
//! [`SparseVector`], [`SparseMatrix`] and [`Subspace`].

mod arith;
mod echelon;
mod matrix;
mod scalar;

pub use matrix::{in_span, kernel_basis, rank, span_rank, subspace_equal, SparseMatrix, SparseVector, Subspace};
pub use scalar::{Field, Scalar};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus {0} is not below 2^31")]
    ModulusTooLarge(u32),
    #[error("unrecognised field `{0}` (expected Q, F<p> or Fp:<p>)")]
    BadField(String),
    #[error("unrecognised scalar `{0}`")]
    BadScalar(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
}
