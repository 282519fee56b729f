//! Groups: validated finite groups given by Cayley tables, a small catalogue
//! of named groups, and the infinite cyclic group.
//!
//! The algebraic code is generic over [`Group`], whose element type is a
//! plain copyable value and whose subsets are represented by [`ElemSet`].

mod finite;
mod integers;
mod sets;

pub use finite::{build_named_group, load_group, named_groups, parse_cayley, subgroup_generated, FiniteGroup, GroupId, Subgroup};
pub use integers::Integers;
pub use sets::{BitSet, ElemSet, IntSet};

use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid Cayley table: {0}")]
    InvalidCayleyTable(String),
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("elements belong to different groups")]
    GroupMismatch,
    #[error("element index {0} out of range")]
    BadElement(usize),
    #[error("integer overflow in Z")]
    Overflow,
    #[error("group order {0} exceeds the supported maximum of 64")]
    TooLarge(usize),
    #[error("io error: {0}")]
    Io(String),
}

/// Group interface used by the partial group algebra.
pub trait Group: Send + Sync {
    type Elem: Copy + Eq + Ord + Hash + Debug + Send + Sync;
    type Set: ElemSet<Self::Elem>;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Self::Elem;
    fn name(&self) -> String;
    fn elem_name(&self, a: Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Option<Self::Elem>;

    /// Left translate `gX`.
    fn translate(&self, g: Self::Elem, set: &Self::Set) -> Self::Set {
        Self::Set::from_elements(set.elements().into_iter().map(|x| self.mul(g, x)))
    }
}

/// Group element tagged with its group, for the checked public operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Finite { group: GroupId, index: usize },
    Integer(i64),
}
