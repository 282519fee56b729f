//! Constructive algebra around the augmentation ideal: the generators
//! `f_g = [g] - e_g`, combining idempotents of `B`, the skew-symmetric
//! cancellation decomposition, and bounded-window checks of the filtration
//! `V_k = R f_1 + … + R f_k` of the augmentation ideal for `G = ℤ`.
//!
//! Windows on `ℤ` bound the diameter of the idempotent set: `(A, i)` is in
//! the window of size `N` when `0 ∈ A` and `max A - min A ≤ N`. This set is
//! closed under `*` and lies inside `[-N, N]`.

mod cancellation;
mod generators;
mod window;

pub use cancellation::{
    cancellation_decompose, combine_idempotents, idempotent_summands, random_instance, CancellationResult,
};
pub use generators::{
    f_element, f_z, ibn_check, ig_decompose, random_ig_element, verify_f_relations, IbnReport, RelationFailure,
    RelationsReport,
};
pub use window::{in_s2, in_vk, quotient_check, sets_in_window, vk_basis, QuotientReport, Violation, VkBasis, Window};

use thiserror::Error;

use crate::exel::AlgebraError;
use crate::linalg::LinalgError;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ZError {
    #[error("window too small: {0}")]
    WindowTooSmall(String),
    #[error("input {0} is not an idempotent of B")]
    NotIdempotent(usize),
    #[error("input {0} is not in B")]
    NotInB(usize),
    #[error("expected {expected} elements, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("the hypothesis sum r_i e_i = 0 fails")]
    Hypothesis,
    #[error("element has nonzero augmentation")]
    NonzeroAugmentation,
    #[error("element lies outside the window")]
    OutsideWindow,
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
