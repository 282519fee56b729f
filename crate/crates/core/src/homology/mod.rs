//! Partial homology and cohomology of finite groups.
//!
//! `H_n^par(G, V) = Tor_n(B, V)` and `H^n_par(G, V) = Ext^n(B, V)` over the
//! partial group algebra are computed from the bar resolution of `B`, whose
//! degree `n` term is `⊕_x R e_{(x)}`. For `Tor` the resolution is turned
//! into one of right modules with the involution `[g]* = [g⁻¹]`, so both
//! complexes have terms `⊕_x e_{(x)} V`. All chain spaces are built in a basis
//! of `V` adapted to the commuting idempotents `e_g`.
//!
//! Ordinary group (co)homology of a subgroup with coefficients in a
//! representation uses the same machinery with the idempotents replaced by 1.

mod coefficients;
mod compute;
mod resolution;
mod space;
mod verify;

use thiserror::Error;

use crate::exel::AlgebraError;
use crate::groupoid::GroupoidError;
use crate::groups::GroupError;
use crate::linalg::LinalgError;

pub use compute::{
    group_cohomology, group_homology, partial_cohomology, partial_cohomology_capped, partial_homology,
    partial_homology_capped, tensor_b_dimension, Checks, HomologyReport, Method, Variance,
};
pub use resolution::{
    bar_basis, bar_boundary, bar_differential, contracting_homotopy, homogeneous_differential, homotopy_identity_holds,
    prefix_set, BarBasisElement, BarTerm,
};
pub use verify::{verify_corollary_b, verify_theorem_a, verify_vanishing, CorollaryBReport, Mismatch, TheoremAReport, VanishingReport};

/// Largest number of chain columns a single degree may have, estimated as
/// `|G|^n · dim V`.
pub const DEFAULT_COLUMN_CAP: usize = 1_000_000;

#[derive(Debug, Error)]
pub enum HomologyError {
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("degree {0} is not valid here")]
    BadDegree(usize),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub(crate) fn check_cap(h: usize, n: usize, dim: usize, cap: usize) -> Result<(), HomologyError> {
    let estimate = (h as u128).saturating_pow(n as u32).saturating_mul(dim as u128);
    if estimate > cap as u128 {
        return Err(HomologyError::SizeCap(format!("{h}^{n} * {dim} = {estimate} chain columns exceeds {cap}")));
    }
    Ok(())
}
