use super::{Group, GroupElement, GroupError, IntSet};

/// The infinite cyclic group, written additively on `i64`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Integers {
    pub fn checked_op(&self, a: GroupElement, b: GroupElement) -> Result<GroupElement, GroupError> {
        match (a, b) {
            (GroupElement::Integer(x), GroupElement::Integer(y)) => {
                x.checked_add(y).map(GroupElement::Integer).ok_or(GroupError::Overflow)
            }
            _ => Err(GroupError::GroupMismatch),
        }
    }

    pub fn checked_inv(&self, a: GroupElement) -> Result<GroupElement, GroupError> {
        match a {
            GroupElement::Integer(x) => x.checked_neg().map(GroupElement::Integer).ok_or(GroupError::Overflow),
            _ => Err(GroupError::GroupMismatch),
        }
    }
}

impl Group for Integers {
    type Elem = i64;
    type Set = IntSet;

    fn identity(&self) -> i64 {
        0
    }

    fn mul(&self, a: i64, b: i64) -> i64 {
        a.checked_add(b).expect("integer overflow in Z")
    }

    fn inv(&self, a: i64) -> i64 {
        a.checked_neg().expect("integer overflow in Z")
    }

    fn name(&self) -> String {
        "Z".to_string()
    }

    fn elem_name(&self, a: i64) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Option<i64> {
        s.trim().parse().ok()
    }

    fn translate(&self, g: i64, set: &IntSet) -> IntSet {
        set.shift(g)
    }
}
