//! The partial group algebra `K_par G` in its canonical basis `(A, g)`,
//! the commutative subalgebra `B` of idempotents, its primitive
//! idempotents, and a text form for elements.

mod algebra;
mod element;
mod primitive;
mod text;

pub use algebra::PartialGroupAlgebra;
pub use element::{s_element, s_inv, s_mul, AlgElem, AlgebraElement, SElem, SElement};
pub use primitive::IdempotentUniverse;

use thiserror::Error;

use crate::linalg::{Field, LinalgError};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("element is not in the idempotent subalgebra B")]
    NotInB,
    #[error("element uses idempotents outside the chosen universe")]
    OutsideUniverse,
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
