use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;

use crate::exel::{AlgElem, PartialGroupAlgebra, SElement};
use crate::groups::{ElemSet, Group, Integers, IntSet};
use crate::linalg::{Field, Scalar};

use super::window::Window;
use super::ZError;

/// `f_g = [g] - e_g`; zero for the identity.
pub fn f_element<G: Group>(alg: &PartialGroupAlgebra<G>, g: G::Elem) -> AlgElem<G> {
    alg.generator(g).sub(&alg.idempotent(g))
}

/// `f_i = ({0,i}, i) - ({0,i}, 0)` in the partial group algebra of `ℤ`.
pub fn f_z(alg: &PartialGroupAlgebra<Integers>, i: i64) -> AlgElem<Integers> {
    f_element(alg, i)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationFailure {
    pub i: i64,
    pub j: i64,
    pub relation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationsReport {
    pub bound: i64,
    pub checked: usize,
    pub failures: Vec<RelationFailure>,
    pub passed: bool,
}

/// For `|i|, |j| ≤ bound` checks, by multiplying out,
/// `e_i f_{i+j} = e_{i+j} f_i + [gⁱ] f_j`, `(e_i - 1) f_i = 0` and
/// `[gⁱ] f_j = e_i f_{i+j} - e_{i+j} f_i`.
pub fn verify_f_relations(bound: i64, field: Field) -> Result<RelationsReport, ZError> {
    if bound < 1 {
        return Err(ZError::WindowTooSmall(format!("bound must be at least 1, got {bound}")));
    }
    let z = Integers;
    let k = PartialGroupAlgebra::new(&z, field);
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut fail = |i, j, relation: &str| failures.push(RelationFailure { i, j, relation: relation.to_string() });
    for i in -bound..=bound {
        let (ei, gi, fi) = (k.idempotent(i), k.generator(i), f_z(&k, i));
        if !k.mul(&ei.sub(&k.one()), &fi).is_zero() {
            fail(i, i, "(e_i - 1) f_i = 0");
        }
        checked += 1;
        for j in -bound..=bound {
            let fj = f_z(&k, j);
            let lhs = k.mul(&ei, &f_z(&k, i + j));
            let tail = k.mul(&k.idempotent(i + j), &fi);
            if lhs != tail.add(&k.mul(&gi, &fj)) {
                fail(i, j, "e_i f_{i+j} = e_{i+j} f_i + [g^i] f_j");
            }
            if k.mul(&gi, &fj) != lhs.sub(&tail) {
                fail(i, j, "[g^i] f_j = e_i f_{i+j} - e_{i+j} f_i");
            }
            checked += 2;
        }
    }
    Ok(RelationsReport { bound, checked, passed: failures.is_empty(), failures })
}

/// Writes `x` with `ε(x) = 0` as `Σ b_g f_g`. Each `b_g` is returned as its
/// canonical representative `b_g e_g`; the reconstruction is verified.
pub fn ig_decompose<G: Group>(alg: &PartialGroupAlgebra<G>, x: &AlgElem<G>) -> Result<BTreeMap<G::Elem, AlgElem<G>>, ZError> {
    if !alg.augmentation(x).is_zero() {
        return Err(ZError::NonzeroAugmentation);
    }
    let id = alg.group().identity();
    let mut out: BTreeMap<G::Elem, AlgElem<G>> = BTreeMap::new();
    for (s, c) in x.terms() {
        if s.elem() == id {
            continue;
        }
        // (A, g) - (A, 1) = e_A f_g
        let b = out.entry(s.elem()).or_insert_with(|| alg.zero());
        b.add_term(SElement { set: s.set().clone(), elem: id }, c.clone());
    }
    out.retain(|_, b| !b.is_zero());
    let mut sum = alg.zero();
    for (&g, b) in &out {
        if alg.mul(b, &alg.idempotent(g)) != *b {
            return Err(ZError::Internal("coefficient is not a multiple of e_g".into()));
        }
        sum = sum.add(&alg.mul(b, &f_element(alg, g)));
    }
    if sum != *x {
        return Err(ZError::Internal("ig_decompose does not reconstruct its input".into()));
    }
    Ok(out)
}

/// `x - ε(x)` for a random combination `x` of `terms` window basis
/// elements with coefficients in `[-3, 3]`.
pub fn random_ig_element<R: Rng>(alg: &PartialGroupAlgebra<Integers>, window: &Window, terms: usize, rng: &mut R) -> AlgElem<Integers> {
    let mut x = alg.zero();
    for _ in 0..terms {
        let s = &window.elements()[rng.random_range(0..window.len())];
        x.add_term(s.clone(), alg.scalar(rng.random_range(-3..=3)));
    }
    x.sub(&alg.augmentation(&x))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IbnReport {
    #[serde(rename = "N")]
    pub n: i64,
    pub columns: usize,
    pub nonzero_entries: usize,
    pub zero: bool,
}

/// The character of `B` killing every `e_g` with `g ≠ 0`.
fn chi(x: &AlgElem<Integers>) -> Scalar {
    x.coefficient(&SElement { set: IntSet::singleton(0), elem: 0 })
}

/// Matrix of `K ⊗_B IG → ⊕_{g≠0} K` on the window spanning set
/// `(A, i) - (A, 0)`, `i ≠ 0`: the entry at `(g, x)` is `χ(b_g e_g)` where
/// `x = Σ b_g f_g`. It must vanish.
pub fn ibn_check(n: i64, field: Field) -> Result<IbnReport, ZError> {
    let window = Window::new(n)?;
    let z = Integers;
    let k = PartialGroupAlgebra::new(&z, field);
    let mut columns = 0;
    let mut nonzero_entries = 0;
    for s in window.elements() {
        if s.elem() == 0 {
            continue;
        }
        let x = k.basis(s.clone()).sub(&k.basis(SElement { set: s.set().clone(), elem: 0 }));
        for (g, b) in ig_decompose(&k, &x)? {
            if !chi(&k.mul(&b, &k.idempotent(g))).is_zero() {
                nonzero_entries += 1;
            }
        }
        columns += 1;
    }
    Ok(IbnReport { n, columns, nonzero_entries, zero: nonzero_entries == 0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exel::s_element;
    use crate::groups::build_named_group;

    fn se(set: &[i64], i: i64) -> AlgElem<Integers> {
        let k = PartialGroupAlgebra::new(&Integers, Field::Rational);
        k.basis(s_element(&Integers, IntSet::from_elements(set.iter().copied()), i).unwrap())
    }

    #[test]
    fn small_generators() {
        let k = PartialGroupAlgebra::new(&Integers, Field::Rational);
        assert!(f_z(&k, 0).is_zero());
        assert_eq!(f_z(&k, 1), se(&[0, 1], 1).sub(&se(&[0, 1], 0)));
        for i in -5..=5 {
            assert!(k.augmentation(&f_z(&k, i)).is_zero());
        }
    }

    #[test]
    fn relation_at_one_one() {
        let k = PartialGroupAlgebra::new(&Integers, Field::Rational);
        let lhs = k.mul(&k.idempotent(1), &f_z(&k, 2));
        assert_eq!(lhs, se(&[0, 1, 2], 2).sub(&se(&[0, 1, 2], 0)));
        let rhs = k.mul(&k.idempotent(2), &f_z(&k, 1)).add(&k.mul(&k.generator(1), &f_z(&k, 1)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn relations_hold() {
        let r = verify_f_relations(3, Field::Rational).unwrap();
        assert!(r.passed, "{:?}", r.failures);
        assert_eq!(r.checked, 7 + 2 * 49);
        assert!(verify_f_relations(0, Field::Rational).is_err());
    }

    #[test]
    fn decompositions() {
        let k = PartialGroupAlgebra::new(&Integers, Field::Rational);
        let d = ig_decompose(&k, &f_z(&k, 3)).unwrap();
        assert_eq!(d, BTreeMap::from([(3, k.idempotent(3))]));
        assert!(ig_decompose(&k, &k.zero()).unwrap().is_empty());
        assert_eq!(ig_decompose(&k, &k.generator(1)), Err(ZError::NonzeroAugmentation));

        let g = build_named_group("S3").unwrap();
        let kg = PartialGroupAlgebra::new(&g, Field::Rational);
        let (a, b) = (1, 3);
        let ab = g.mul(a, b);
        let e = kg.mul(&kg.idempotent(a), &kg.idempotent(ab));
        let x = kg.mul(&kg.generator(a), &kg.generator(b)).sub(&e);
        assert_eq!(ig_decompose(&kg, &x).unwrap(), BTreeMap::from([(ab, e)]));
    }

    #[test]
    fn random_elements_round_trip() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let k = PartialGroupAlgebra::new(&Integers, Field::Rational);
        let w = Window::new(3).unwrap();
        for _ in 0..20 {
            let x = random_ig_element(&k, &w, 4, &mut rng);
            assert!(k.augmentation(&x).is_zero());
            ig_decompose(&k, &x).unwrap();
        }
    }

    #[test]
    fn ibn_window() {
        let r = ibn_check(3, Field::Rational).unwrap();
        assert!(r.zero);
        assert!(r.columns > 0);
    }
}
