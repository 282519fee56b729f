//! The groupoid `Γ(G)` whose vertices are the subsets of `G` containing the
//! identity and whose arrows are pairs `(A, g)` with `g⁻¹ ∈ A`, together with
//! the isomorphism `λ` from the partial group algebra onto its groupoid
//! algebra, the matrix picture of each connected component, and partial
//! representation modules.

mod maps;
mod module;
mod structure;
mod tensor;
mod zeta;

use thiserror::Error;

use crate::exel::AlgebraError;
use crate::groups::GroupError;
use crate::linalg::LinalgError;

pub use maps::{GroupRingMatrix, MonomialMatrix};
pub use module::{b_module, regular_module, satisfies_partial_rep_axioms, GroupRep, PartialRepModule, Side};
pub use structure::{build_groupoid, Arrow, Component, Groupoid, GroupoidElement, DEFAULT_MAX_ORDER};
pub use tensor::{EquivalenceData, TensorReport};
pub use zeta::ZetaReport;

#[derive(Debug, Error)]
pub enum GroupoidError {
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("no component with index {0}")]
    NoSuchComponent(usize),
    #[error("arrow or vertex is not in the component")]
    NotInComponent,
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
