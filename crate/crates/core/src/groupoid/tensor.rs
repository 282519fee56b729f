//! The tensor product `B ⊗_R KΔ` of the right module `B` with the
//! groupoid component algebra, computed as a quotient of `B ⊗_K KΔ` by the
//! balancing relations `b^s ⊗ a - b ⊗ λ_Δ(s) a` for canonical `s`.

use std::collections::HashMap;

use serde::Serialize;

use crate::exel::{AlgElem, IdempotentUniverse, PartialGroupAlgebra, SElem};
use crate::groups::{BitSet, ElemSet, FiniteGroup};
use crate::linalg::{Field, SparseVector, Subspace};

use super::structure::{Arrow, Component, Groupoid, GroupoidElement};
use super::GroupoidError;

/// Classes of `t ~ s ⇔ (t ∈ C ⇔ s ∈ C for every vertex C of Δ)`, their
/// least elements `X`, and for each vertex `C` the split `C' = X ∩ C`,
/// `C'' = X ∖ C'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceData {
    pub classes: Vec<Vec<usize>>,
    pub representatives: BitSet,
    pub split: Vec<(BitSet, BitSet)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorReport {
    pub component: usize,
    pub n: usize,
    pub stabilizer_order: usize,
    pub dimension: usize,
    pub w_dimension: usize,
    pub h_action_trivial: bool,
    pub lambda_pi_identity: bool,
    pub phi_well_defined: bool,
    pub phi_psi_identity: bool,
    pub psi_phi_identity: bool,
}

impl TensorReport {
    pub fn passed(&self) -> bool {
        self.dimension == self.n
            && self.w_dimension == 1
            && self.h_action_trivial
            && self.lambda_pi_identity
            && self.phi_well_defined
            && self.phi_psi_identity
            && self.psi_phi_identity
    }
}

impl Groupoid<'_> {
    pub fn equivalence_data(&self, comp: &Component) -> EquivalenceData {
        let g = self.group();
        let mut by_signature: Vec<(Vec<bool>, Vec<usize>)> = Vec::new();
        for t in g.elements() {
            let sig: Vec<bool> = comp.vertices().iter().map(|v| v.contains(t)).collect();
            match by_signature.iter_mut().find(|(s, _)| *s == sig) {
                Some((_, class)) => class.push(t),
                None => by_signature.push((sig, vec![t])),
            }
        }
        let classes: Vec<Vec<usize>> = by_signature.into_iter().map(|(_, c)| c).collect();
        let representatives = BitSet::from_elements(classes.iter().map(|c| c[0]));
        let split = comp
            .vertices()
            .iter()
            .map(|c| {
                let prime = BitSet(representatives.0 & c.0);
                (prime, BitSet(representatives.0 & !prime.0))
            })
            .collect();
        EquivalenceData { classes, representatives, split }
    }

    /// `π̃(C, 1) = ∏_{t ∈ C'} e_t ∏_{f ∈ C''} (1 - e_f)`.
    pub fn tilde_pi(&self, comp: &Component, data: &EquivalenceData, vertex: BitSet, field: Field) -> Result<AlgElem<FiniteGroup>, GroupoidError> {
        let i = comp.position(vertex).ok_or(GroupoidError::NotInComponent)?;
        let k = PartialGroupAlgebra::new(self.group(), field);
        let (prime, second) = data.split[i];
        let mut out = k.idempotent_of(&prime);
        for f in second.elements() {
            out = k.mul(&out, &k.one().sub(&k.idempotent(f)));
        }
        Ok(out)
    }

    /// Computes `B ⊗_R KΔ` and the maps `φ`, `ψ` between it and `λ_Δ(B)`.
    pub fn tensor_b_kdelta(&self, comp: &Component, field: Field) -> Result<TensorReport, GroupoidError> {
        let g = self.group();
        let k = PartialGroupAlgebra::new(g, field);
        let u = IdempotentUniverse::whole(g);
        let nb = u.num_primitives();
        let arrows = comp.arrows(g);
        let arrow_index: HashMap<Arrow, usize> = arrows.iter().enumerate().map(|(i, a)| (*a, i)).collect();
        let m = arrows.len();
        let basis = k.canonical_basis();
        let primitives: Vec<AlgElem<FiniteGroup>> = (0..nb).map(|i| u.primitive(field, i)).collect();

        // b^s in primitive coordinates, for every canonical s and primitive b
        let mut right: Vec<Vec<SparseVector>> = Vec::with_capacity(basis.len());
        for s in &basis {
            let row = primitives
                .iter()
                .map(|p| Ok(u.to_primitive(&k.right_action_on_b(s, p)?)?))
                .collect::<Result<Vec<_>, GroupoidError>>()?;
            right.push(row);
        }
        let lambdas: Vec<GroupoidElement> = basis.iter().map(|s| self.lambda_delta(comp, &k.basis(s.clone()))).collect();

        let tensor_vec = |b: &SparseVector, x: &GroupoidElement, keep: &dyn Fn(&Arrow) -> Option<usize>, width: usize| {
            let mut entries = Vec::new();
            for (bi, bc) in b.entries() {
                for (a, ac) in x.terms() {
                    if let Some(ai) = keep(a) {
                        entries.push((bi * width + ai, bc * ac));
                    }
                }
            }
            SparseVector::from_entries(field, nb * width, entries).expect("in range")
        };

        let full_keep = |a: &Arrow| arrow_index.get(a).copied();
        let relations = self.balancing_relations(&basis, &right, &lambdas, &arrows, field, nb, &|b, x| tensor_vec(b, x, &full_keep, m));
        let mut rel = Subspace::new(field, nb * m);
        for r in &relations {
            rel.insert(r)?;
        }
        let dimension = nb * m - rel.dim();

        // the first column W = KΔ·(A, 1) and its right isotropy action
        let base = comp.base();
        let w_arrows: Vec<Arrow> = arrows.iter().copied().filter(|a| a.source == base).collect();
        let w_index: HashMap<Arrow, usize> = w_arrows.iter().enumerate().map(|(i, a)| (*a, i)).collect();
        let wm = w_arrows.len();
        let w_keep = |a: &Arrow| w_index.get(a).copied();
        let w_relations = self.balancing_relations(&basis, &right, &lambdas, &w_arrows, field, nb, &|b, x| tensor_vec(b, x, &w_keep, wm));
        let mut w_rel = Subspace::new(field, nb * wm);
        for r in &w_relations {
            w_rel.insert(r)?;
        }
        let w_dimension = nb * wm - w_rel.dim();
        let mut h_action_trivial = true;
        for &h in comp.stabilizer().elements() {
            let loop_h = GroupoidElement::arrow(field, Arrow { source: base, elem: h });
            for (bi, _) in primitives.iter().enumerate() {
                for w in &w_arrows {
                    let b = SparseVector::unit(field, nb, bi);
                    let moved = self.mul(&GroupoidElement::arrow(field, *w), &loop_h);
                    let diff = tensor_vec(&b, &moved, &w_keep, wm).sub(&tensor_vec(&b, &GroupoidElement::arrow(field, *w), &w_keep, wm))?;
                    if !w_rel.contains(&diff)? {
                        h_action_trivial = false;
                    }
                }
            }
        }

        // φ(b ⊗ a) = λ_Δ(b) ◁ a, valued in the vertex span of λ_Δ(B)
        let n = comp.n();
        let vertex_coords = |x: &GroupoidElement| -> Result<SparseVector, GroupoidError> {
            let mut entries = Vec::new();
            for (a, c) in x.terms() {
                if a.elem != 0 {
                    return Err(GroupoidError::InvariantViolation("φ left the diagonal".into()));
                }
                entries.push((comp.position(a.source).ok_or(GroupoidError::NotInComponent)?, c.clone()));
            }
            Ok(SparseVector::from_entries(field, n, entries)?)
        };
        let lam_prims: Vec<GroupoidElement> = primitives.iter().map(|p| self.lambda_delta(comp, p)).collect();
        let phi = |v: &SparseVector| -> Result<SparseVector, GroupoidError> {
            let mut acc = GroupoidElement::zero(field);
            for (idx, c) in v.entries() {
                let (bi, ai) = (idx / m, idx % m);
                let a = arrows[ai];
                let conj = self.mul(&self.mul(&GroupoidElement::arrow(field, self.inverse_arrow(a)), &lam_prims[bi]), &GroupoidElement::arrow(field, a));
                acc = acc.add(&conj.scale(c));
            }
            vertex_coords(&acc)
        };
        let mut phi_well_defined = true;
        for r in &relations {
            if !phi(r)?.is_zero() {
                phi_well_defined = false;
            }
        }

        let data = self.equivalence_data(comp);
        let unit = self.component_unit(comp, field);
        let mut lambda_pi_identity = true;
        let mut psi_images = Vec::with_capacity(n);
        for &c in comp.vertices() {
            let tp = self.tilde_pi(comp, &data, c, field)?;
            if self.lambda_delta(comp, &tp) != GroupoidElement::arrow(field, Arrow { source: c, elem: 0 }) {
                lambda_pi_identity = false;
            }
            psi_images.push(tensor_vec(&u.to_primitive(&tp)?, &unit, &full_keep, m));
        }
        let mut phi_psi_identity = true;
        for (i, img) in psi_images.iter().enumerate() {
            if phi(img)? != SparseVector::unit(field, n, i) {
                phi_psi_identity = false;
            }
        }
        let mut psi_phi_identity = true;
        for idx in 0..nb * m {
            let x = SparseVector::unit(field, nb * m, idx);
            let y = phi(&x)?;
            let mut back = SparseVector::zero(field, nb * m);
            for (i, c) in y.entries() {
                back = back.add(&psi_images[*i].scale(c)?)?;
            }
            if !rel.contains(&back.sub(&x)?)? {
                psi_phi_identity = false;
            }
        }

        Ok(TensorReport {
            component: comp.index(),
            n,
            stabilizer_order: comp.stabilizer().order(),
            dimension,
            w_dimension,
            h_action_trivial,
            lambda_pi_identity,
            phi_well_defined,
            phi_psi_identity,
            psi_phi_identity,
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn balancing_relations(
        &self,
        basis: &[SElem<FiniteGroup>],
        right: &[Vec<SparseVector>],
        lambdas: &[GroupoidElement],
        arrows: &[Arrow],
        field: Field,
        nb: usize,
        tensor: &dyn Fn(&SparseVector, &GroupoidElement) -> SparseVector,
    ) -> Vec<SparseVector> {
        let mut out = Vec::with_capacity(basis.len() * nb * arrows.len());
        for (si, row) in right.iter().enumerate().take(basis.len()) {
            for (bi, rb) in row.iter().enumerate().take(nb) {
                let b = SparseVector::unit(field, nb, bi);
                for a in arrows {
                    let ga = GroupoidElement::arrow(field, *a);
                    let lhs = tensor(rb, &ga);
                    let rhs = tensor(&b, &self.mul(&lambdas[si], &ga));
                    let r = lhs.sub(&rhs).expect("same shape");
                    if !r.is_zero() {
                        out.push(r);
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::{build_groupoid, DEFAULT_MAX_ORDER};
    use crate::groups::build_named_group;

    #[test]
    fn c3_tensor_reports() {
        let g = build_named_group("C3").unwrap();
        let gd = build_groupoid(&g, DEFAULT_MAX_ORDER).unwrap();
        for comp in gd.components() {
            let r = gd.tensor_b_kdelta(comp, Field::Rational).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn representatives_separate_vertices() {
        let g = build_named_group("C2xC2").unwrap();
        let gd = build_groupoid(&g, DEFAULT_MAX_ORDER).unwrap();
        for comp in gd.components() {
            let d = gd.equivalence_data(comp);
            let primes: std::collections::HashSet<u64> = d.split.iter().map(|(p, _)| p.0).collect();
            assert_eq!(primes.len(), comp.n());
        }
    }
}
