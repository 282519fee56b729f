use serde::Serialize;

use crate::exel::{AlgElem, PartialGroupAlgebra};
use crate::groups::{BitSet, ElemSet, FiniteGroup};
use crate::linalg::Field;

use super::structure::{Arrow, Component, Groupoid, GroupoidElement};
use super::GroupoidError;

impl Groupoid<'_> {
    /// `∏_{r ∈ A} e_r ∏_{s ∈ C ∖ A} (1 - e_s)`.
    pub fn p_hat_over(&self, a: BitSet, c: BitSet, field: Field) -> AlgElem<FiniteGroup> {
        let k = PartialGroupAlgebra::new(self.group(), field);
        let mut out = k.idempotent_of(&a);
        for s in c.elements() {
            if !a.contains(s) {
                out = k.mul(&out, &k.one().sub(&k.idempotent(s)));
            }
        }
        out
    }

    /// `P̂_A`, taken over the whole group. Restricting the complement to the
    /// union of the vertices of `Δ` breaks left linearity of `ζ_Δ` whenever
    /// that union is a proper subset (e.g. the component of `{1}`).
    pub fn p_hat(&self, a: BitSet, field: Field) -> AlgElem<FiniteGroup> {
        let all = BitSet::from_elements(self.group().elements());
        self.p_hat_over(a, all, field)
    }

    /// `ζ_Δ(A, g) = [g] P̂_A`, a section of `λ_Δ` on the arrows of `Δ`.
    pub fn zeta_delta(&self, comp: &Component, arrow: Arrow, field: Field) -> Result<AlgElem<FiniteGroup>, GroupoidError> {
        if !self.is_arrow(arrow) || comp.position(arrow.source).is_none() {
            return Err(GroupoidError::NotInComponent);
        }
        let k = PartialGroupAlgebra::new(self.group(), field);
        Ok(k.mul(&k.generator(arrow.elem), &self.p_hat(arrow.source, field)))
    }

    /// Linear extension of [`zeta_delta`](Self::zeta_delta).
    pub fn zeta(&self, comp: &Component, x: &GroupoidElement) -> Result<AlgElem<FiniteGroup>, GroupoidError> {
        let k = PartialGroupAlgebra::new(self.group(), x.field());
        let mut out = k.zero();
        for (a, c) in x.terms() {
            out = out.add(&self.zeta_delta(comp, *a, x.field())?.scale(c));
        }
        Ok(out)
    }

    /// Checks `λ_Δ ∘ ζ_Δ = id`, multiplicativity of `ζ_Δ` on all pairs of
    /// arrows, and `ζ_Δ(λ_Δ(s) γ) = s ζ_Δ(γ)` for canonical basis elements `s`.
    pub fn zeta_checks(&self, comp: &Component, field: Field) -> Result<ZetaReport, GroupoidError> {
        let g = self.group();
        let k = PartialGroupAlgebra::new(g, field);
        let arrows = comp.arrows(g);
        let zetas: Vec<AlgElem<FiniteGroup>> =
            arrows.iter().map(|a| self.zeta_delta(comp, *a, field)).collect::<Result<_, _>>()?;
        let gamma = |a: &Arrow| GroupoidElement::arrow(field, *a);
        let section = arrows.iter().zip(&zetas).all(|(a, z)| self.lambda_delta(comp, z) == gamma(a));
        let mut multiplicative = true;
        for (a, za) in arrows.iter().zip(&zetas) {
            for (b, zb) in arrows.iter().zip(&zetas) {
                let prod = self.mul(&gamma(a), &gamma(b));
                if self.zeta(comp, &prod)? != k.mul(za, zb) {
                    multiplicative = false;
                }
            }
        }
        let mut linear = true;
        for s in k.canonical_basis() {
            let ls = self.lambda_delta(comp, &k.basis(s.clone()));
            for (b, zb) in arrows.iter().zip(&zetas) {
                if self.zeta(comp, &self.mul(&ls, &gamma(b)))? != k.mul(&k.basis(s.clone()), zb) {
                    linear = false;
                }
            }
        }
        Ok(ZetaReport { component: comp.index(), arrows: arrows.len(), section, multiplicative, module_map: linear })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaReport {
    pub component: usize,
    pub arrows: usize,
    pub section: bool,
    pub multiplicative: bool,
    pub module_map: bool,
}

impl ZetaReport {
    pub fn passed(&self) -> bool {
        self.section && self.multiplicative && self.module_map
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::{build_groupoid, DEFAULT_MAX_ORDER};
    use crate::groups::build_named_group;

    #[test]
    fn zeta_on_c3() {
        let g = build_named_group("C3").unwrap();
        let gd = build_groupoid(&g, DEFAULT_MAX_ORDER).unwrap();
        for comp in gd.components() {
            let r = gd.zeta_checks(comp, Field::Rational).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        let bad = Arrow { source: BitSet::from_elements([0, 1]), elem: 1 };
        assert!(matches!(gd.zeta_delta(&gd.components()[0], bad, Field::Rational), Err(GroupoidError::NotInComponent)));
    }

    #[test]
    fn vertex_union_complement_is_not_left_linear() {
        // component of {1} in C2: the union of vertices is {1}, so the
        // restricted idempotent is 1, yet λ_Δ([a]) = 0 there
        let g = build_named_group("C2").unwrap();
        let gd = build_groupoid(&g, DEFAULT_MAX_ORDER).unwrap();
        let comp = &gd.components()[0];
        assert_eq!(comp.vertices(), &[BitSet::singleton(0)]);
        let k = PartialGroupAlgebra::new(&g, Field::Rational);
        let restricted = gd.p_hat_over(BitSet::singleton(0), comp.union(), Field::Rational);
        assert_eq!(restricted, k.one());
        assert!(gd.lambda_delta(comp, &k.generator(1)).is_zero());
        assert!(!k.mul(&k.generator(1), &restricted).is_zero());
        let full = gd.zeta_delta(comp, Arrow { source: BitSet::singleton(0), elem: 0 }, Field::Rational).unwrap();
        assert!(k.mul(&k.generator(1), &full).is_zero());
    }

    #[test]
    fn worked_values() {
        let g = build_named_group("C3").unwrap();
        let gd = build_groupoid(&g, DEFAULT_MAX_ORDER).unwrap();
        let k = PartialGroupAlgebra::new(&g, Field::Rational);
        let z = gd.zeta_delta(&gd.components()[1], Arrow { source: BitSet::from_elements([0, 1]), elem: 0 }, Field::Rational).unwrap();
        assert_eq!(z, k.idempotent(1).sub(&k.mul(&k.idempotent(1), &k.idempotent(2))));
        let c2 = build_named_group("C2").unwrap();
        let gd = build_groupoid(&c2, DEFAULT_MAX_ORDER).unwrap();
        let k = PartialGroupAlgebra::new(&c2, Field::Rational);
        let comp = &gd.components()[1];
        assert_eq!(gd.zeta_delta(comp, Arrow { source: BitSet::from_elements([0, 1]), elem: 1 }, Field::Rational).unwrap(), k.generator(1));
    }
}
