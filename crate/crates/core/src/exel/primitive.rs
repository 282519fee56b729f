use std::collections::HashMap;

use crate::groups::{ElemSet, FiniteGroup, Group};
use crate::linalg::{Field, Scalar, SparseVector};

use super::element::{AlgElem, AlgebraElement, SElement};
use super::AlgebraError;

/// A finite set `U ∋ 1` of group elements. The idempotents `e_A` with
/// `A ⊆ U` span a Boolean subalgebra `B_U` of `B`, whose primitive
/// idempotents are indexed by the subsets `S ∋ 1` of `U`. For a finite
/// group with `U = G` these are the primitive idempotents of `B` itself.
#[derive(Clone, Debug)]
pub struct IdempotentUniverse<G: Group> {
    elems: Vec<G::Elem>,
    pos: HashMap<G::Elem, usize>,
}

impl<G: Group> IdempotentUniverse<G> {
    /// The identity is placed first; at most 64 elements.
    pub fn new(group: &G, elems: impl IntoIterator<Item = G::Elem>) -> Result<Self, AlgebraError> {
        let id = group.identity();
        let mut list = vec![id];
        for e in elems {
            if !list.contains(&e) {
                list.push(e);
            }
        }
        list[1..].sort();
        if list.len() > 64 {
            return Err(AlgebraError::InvalidElement("idempotent universe larger than 64".into()));
        }
        let pos = list.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        Ok(IdempotentUniverse { elems: list, pos })
    }

    pub fn elements(&self) -> &[G::Elem] {
        &self.elems
    }

    pub fn num_primitives(&self) -> usize {
        1 << (self.elems.len() - 1)
    }

    pub fn contains(&self, e: G::Elem) -> bool {
        self.pos.contains_key(&e)
    }

    /// Primitive index of a set `A ∋ 1` inside the universe.
    pub fn index_of(&self, set: &G::Set) -> Option<usize> {
        let mut m = 0usize;
        for e in set.elements() {
            match self.pos.get(&e)? {
                0 => {}
                &p => m |= 1 << (p - 1),
            }
        }
        Some(m)
    }

    pub fn set_of(&self, index: usize) -> G::Set {
        G::Set::from_elements(
            std::iter::once(self.elems[0])
                .chain((1..self.elems.len()).filter(|p| index >> (p - 1) & 1 == 1).map(|p| self.elems[p])),
        )
    }

    /// Coordinates of an element of `B_U` in the primitive idempotents,
    /// via `e_A = Σ_{S ⊇ A} p_S`.
    pub fn to_primitive(&self, x: &AlgElem<G>) -> Result<SparseVector, AlgebraError> {
        let full = self.num_primitives() - 1;
        let mut entries = Vec::new();
        for (s, c) in x.terms() {
            if s.elem != self.elems[0] {
                return Err(AlgebraError::NotInB);
            }
            let a = self.index_of(&s.set).ok_or(AlgebraError::OutsideUniverse)?;
            let rest = full & !a;
            let mut sub = rest;
            loop {
                entries.push((a | sub, c.clone()));
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
        }
        Ok(SparseVector::from_entries(x.field(), self.num_primitives(), entries)?)
    }

    /// Inverse of [`to_primitive`](Self::to_primitive), via
    /// `p_S = Σ_{T ⊇ S} (-1)^{|T∖S|} e_T`.
    pub fn from_primitive(&self, v: &SparseVector) -> AlgElem<G> {
        let field = v.field();
        let full = self.num_primitives() - 1;
        let mut out: AlgElem<G> = AlgebraElement::zero(field);
        for (s, c) in v.entries() {
            let rest = full & !s;
            let mut sub = rest;
            loop {
                let sign = if sub.count_ones().is_multiple_of(2) { c.clone() } else { -c };
                out.add_term(SElement { set: self.set_of(s | sub), elem: self.elems[0] }, sign);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
        }
        out
    }

    /// The primitive idempotent with index `i` as an algebra element.
    pub fn primitive(&self, field: Field, i: usize) -> AlgElem<G> {
        self.from_primitive(&SparseVector::unit(field, self.num_primitives(), i))
    }

    pub fn one_coordinates(&self, field: Field) -> SparseVector {
        SparseVector::from_entries(field, self.num_primitives(), (0..self.num_primitives()).map(|i| (i, Scalar::one(field))))
            .expect("in range")
    }
}

impl IdempotentUniverse<FiniteGroup> {
    /// The whole group; primitive index `i` is the set with mask `1 | i << 1`.
    pub fn whole(group: &FiniteGroup) -> Self {
        IdempotentUniverse::new(group, group.elements()).expect("order at most 64")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exel::PartialGroupAlgebra;
    use crate::groups::{build_named_group, BitSet, Integers};

    #[test]
    fn round_trip_and_products() {
        let g = build_named_group("C2xC2").unwrap();
        let k = PartialGroupAlgebra::new(&g, Field::Rational);
        let u = IdempotentUniverse::whole(&g);
        assert_eq!(u.num_primitives(), 8);
        let x = k.idempotent(1).add(&k.idempotent(2).scale(&k.scalar(3)));
        let v = u.to_primitive(&x).unwrap();
        assert_eq!(u.from_primitive(&v), x);
        // primitives are orthogonal idempotents summing to one
        let mut sum = k.zero();
        for i in 0..8 {
            let p = u.primitive(Field::Rational, i);
            assert_eq!(k.mul(&p, &p), p);
            for j in 0..i {
                assert!(k.mul(&p, &u.primitive(Field::Rational, j)).is_zero());
            }
            sum = sum.add(&p);
        }
        assert_eq!(sum, k.one());
        assert_eq!(u.set_of(0b101), BitSet(0b1011));
    }

    #[test]
    fn integer_universe() {
        let z = Integers;
        let k = PartialGroupAlgebra::new(&z, Field::Prime(3));
        let u = IdempotentUniverse::new(&z, -1..=1).unwrap();
        let x = k.idempotent(-1);
        assert_eq!(u.from_primitive(&u.to_primitive(&x).unwrap()), x);
        assert!(matches!(u.to_primitive(&k.idempotent(5)), Err(AlgebraError::OutsideUniverse)));
    }
}
