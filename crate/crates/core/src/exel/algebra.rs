use crate::groups::{BitSet, ElemSet, FiniteGroup, Group};
use crate::linalg::{Field, Scalar};

use super::element::{s_inv, s_mul, AlgElem, AlgebraElement, SElem, SElement};
use super::AlgebraError;

/// The partial group algebra of a group over a field, realised on the
/// canonical basis `(A, g)`.
#[derive(Clone, Copy, Debug)]
pub struct PartialGroupAlgebra<'g, G: Group> {
    group: &'g G,
    field: Field,
}

impl<'g, G: Group> PartialGroupAlgebra<'g, G> {
    pub fn new(group: &'g G, field: Field) -> Self {
        PartialGroupAlgebra { group, field }
    }

    pub fn group(&self) -> &'g G {
        self.group
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn scalar(&self, n: i64) -> Scalar {
        Scalar::from_int(self.field, n)
    }

    pub fn zero(&self) -> AlgElem<G> {
        AlgebraElement::zero(self.field)
    }

    pub fn one(&self) -> AlgElem<G> {
        self.basis(self.unit())
    }

    /// The basis element `({1}, 1)`.
    pub fn unit(&self) -> SElem<G> {
        SElement { set: G::Set::singleton(self.group.identity()), elem: self.group.identity() }
    }

    /// The basis element `({1, g}, g)`.
    pub fn generator_elem(&self, g: G::Elem) -> SElem<G> {
        SElement { set: G::Set::from_elements([self.group.identity(), g]), elem: g }
    }

    pub fn basis(&self, s: SElem<G>) -> AlgElem<G> {
        AlgebraElement::term(self.field, s, Scalar::one(self.field))
    }

    /// `[g]`
    pub fn generator(&self, g: G::Elem) -> AlgElem<G> {
        self.basis(self.generator_elem(g))
    }

    /// `e_g = [g][g⁻¹]`
    pub fn idempotent(&self, g: G::Elem) -> AlgElem<G> {
        self.idempotent_of(&G::Set::from_elements([self.group.identity(), g]))
    }

    /// `e_A = ∏_{a ∈ A} e_a`; the identity is added to `A` if missing.
    pub fn idempotent_of(&self, set: &G::Set) -> AlgElem<G> {
        self.basis(SElement { set: set.with(self.group.identity()), elem: self.group.identity() })
    }

    fn check(&self, x: &AlgElem<G>) -> Result<(), AlgebraError> {
        if x.field != self.field {
            return Err(AlgebraError::FieldMismatch(self.field, x.field));
        }
        Ok(())
    }

    pub fn try_mul(&self, x: &AlgElem<G>, y: &AlgElem<G>) -> Result<AlgElem<G>, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        let mut out = self.zero();
        for (s, a) in &x.terms {
            for (t, b) in &y.terms {
                out.add_term(s_mul(self.group, s, t), a * b);
            }
        }
        Ok(out)
    }

    /// Bilinear extension of the semigroup product.
    pub fn mul(&self, x: &AlgElem<G>, y: &AlgElem<G>) -> AlgElem<G> {
        self.try_mul(x, y).expect("algebra field mismatch")
    }

    pub fn product(&self, factors: &[AlgElem<G>]) -> AlgElem<G> {
        factors.iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    /// Linear extension of `(A, g) ↦ (g⁻¹A, g⁻¹)`; an anti-automorphism.
    pub fn star(&self, x: &AlgElem<G>) -> AlgElem<G> {
        let mut out = self.zero();
        for (s, c) in &x.terms {
            out.add_term(s_inv(self.group, s), c.clone());
        }
        out
    }

    /// Canonical form of the word `[g1]⋯[gn]`: `({1, g1, g1g2, …}, g1⋯gn)`.
    pub fn evaluate_word(&self, word: &[G::Elem]) -> SElem<G> {
        let mut set = G::Set::singleton(self.group.identity());
        let mut acc = self.group.identity();
        for &g in word {
            acc = self.group.mul(acc, g);
            set.insert(acc);
        }
        SElement { set, elem: acc }
    }

    /// `(A, g) ↦ (A, 1)`, extended linearly.
    pub fn augmentation(&self, x: &AlgElem<G>) -> AlgElem<G> {
        let mut out = self.zero();
        for (s, c) in &x.terms {
            out.add_term(SElement { set: s.set.clone(), elem: self.group.identity() }, c.clone());
        }
        out
    }

    /// Membership in the commutative subalgebra `B` spanned by the `(A, 1)`.
    pub fn is_in_b(&self, x: &AlgElem<G>) -> bool {
        x.terms.keys().all(|s| s.elem == self.group.identity())
    }

    fn check_b(&self, b: &AlgElem<G>) -> Result<(), AlgebraError> {
        self.check(b)?;
        if !self.is_in_b(b) {
            return Err(AlgebraError::NotInB);
        }
        Ok(())
    }

    /// Left action on `B`: `[g] b [g⁻¹]`.
    pub fn left_action_on_b(&self, g: G::Elem, b: &AlgElem<G>) -> Result<AlgElem<G>, AlgebraError> {
        self.check_b(b)?;
        let gb = self.mul(&self.generator(g), b);
        Ok(self.mul(&gb, &self.generator(self.group.inv(g))))
    }

    /// Right action of a canonical basis element on `B`: `s* b s`.
    pub fn right_action_on_b(&self, s: &SElem<G>, b: &AlgElem<G>) -> Result<AlgElem<G>, AlgebraError> {
        self.check_b(b)?;
        let st = self.basis(s_inv(self.group, s));
        Ok(self.mul(&self.mul(&st, b), &self.basis(s.clone())))
    }

    /// Right action of a general element on `B`, extended linearly in the acting element.
    pub fn right_action_on_b_by(&self, r: &AlgElem<G>, b: &AlgElem<G>) -> Result<AlgElem<G>, AlgebraError> {
        let mut out = self.zero();
        for (s, c) in &r.terms {
            out = out.add(&self.right_action_on_b(s, b)?.scale(c));
        }
        Ok(out)
    }
}

impl<'g> PartialGroupAlgebra<'g, FiniteGroup> {
    /// All `(A, g)` with `{1, g} ⊆ A ⊆ G`, in [`SElement`] order.
    pub fn canonical_basis(&self) -> Vec<SElem<FiniteGroup>> {
        let g = self.group;
        let full = g.all().0;
        let mut out = Vec::new();
        for x in g.elements() {
            let base = 1u64 | (1 << x);
            let rest = full & !base;
            let mut sub = rest;
            loop {
                out.push(SElement { set: BitSet(base | sub), elem: x });
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
        }
        out.sort();
        out
    }

    pub fn dimension(&self) -> usize {
        self.canonical_basis().len()
    }

    /// Index sets `A ∋ 1` of the primitive idempotents of `B`, in increasing mask order.
    pub fn primitive_sets(&self) -> Vec<BitSet> {
        let n = self.group.order();
        (0..1u64 << (n - 1)).map(|m| BitSet(1 | (m << 1))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_named_group, Integers, IntSet};

    #[test]
    fn dimension_formula() {
        for (name, dim) in [("C1", 1), ("C2", 3), ("C3", 8), ("C4", 20), ("C2xC2", 20), ("S3", 112)] {
            let g = build_named_group(name).unwrap();
            let k = PartialGroupAlgebra::new(&g, Field::Rational);
            let n = g.order() as u32;
            assert_eq!(k.dimension(), dim, "{name}");
            if n >= 2 {
                assert_eq!(dim, (n as usize + 1) << (n - 2));
            }
        }
    }

    #[test]
    fn relations_of_generators() {
        let g = build_named_group("C3").unwrap();
        let k = PartialGroupAlgebra::new(&g, Field::Rational);
        let (a, b) = (1, 2);
        let lhs = k.product(&[k.generator(a), k.generator(b), k.generator(g.inv(b))]);
        let rhs = k.product(&[k.generator(g.mul(a, b)), k.generator(g.inv(b))]);
        assert_eq!(lhs, rhs);
        assert_eq!(k.generator(0), k.one());
        // [g][g⁻¹] is idempotent but not the identity
        let e = k.idempotent(a);
        assert_eq!(k.mul(&e, &e), e);
        assert_ne!(e, k.one());
    }

    #[test]
    fn integer_words() {
        let z = Integers;
        let k = PartialGroupAlgebra::new(&z, Field::Rational);
        let s = k.evaluate_word(&[2, -1, 3]);
        assert_eq!(s.set, IntSet::from_elements([0, 2, 1, 4]));
        assert_eq!(s.elem, 4);
        assert_eq!(k.basis(s), k.product(&[k.generator(2), k.generator(-1), k.generator(3)]));
    }

    #[test]
    fn actions_on_b() {
        let g = build_named_group("C3").unwrap();
        let k = PartialGroupAlgebra::new(&g, Field::Rational);
        let b = k.idempotent(2);
        // [g] e_{g²} [g²] = e_g e_{g g²} = e_g
        assert_eq!(k.left_action_on_b(1, &b).unwrap(), k.idempotent(1));
        assert_eq!(k.left_action_on_b(1, &k.generator(1)), Err(AlgebraError::NotInB));
        let s = k.generator_elem(1);
        assert_eq!(k.right_action_on_b(&s, &k.idempotent(1)).unwrap(), k.idempotent(2));
    }
}
