use std::collections::BTreeMap;

use crate::exel::AlgElem;
use crate::groups::{ElemSet, FiniteGroup, Group};
use crate::linalg::{Field, Scalar};

use super::structure::{Arrow, Component, Groupoid, GroupoidElement};
use super::GroupoidError;

impl Groupoid<'_> {
    /// Component of the isomorphism onto the groupoid algebra:
    /// `(S, g) ↦ Σ (D, g)` over vertices `D ∈ Δ` with `g⁻¹ ∈ D` and `S ⊆ gD`.
    pub fn lambda_delta(&self, comp: &Component, x: &AlgElem<FiniteGroup>) -> GroupoidElement {
        let g = self.group();
        let mut out = GroupoidElement::zero(x.field());
        for (s, c) in x.terms() {
            let gi = g.inv(s.elem());
            for &d in comp.vertices() {
                if d.contains(gi) && s.set().is_subset(&g.translate(s.elem(), &d)) {
                    out.add_term(Arrow { source: d, elem: s.elem() }, c.clone());
                }
            }
        }
        out
    }

    /// The full map `λ = ⊕_Δ λ_Δ`.
    pub fn lambda(&self, x: &AlgElem<FiniteGroup>) -> GroupoidElement {
        self.components()
            .iter()
            .fold(GroupoidElement::zero(x.field()), |acc, c| acc.add(&self.lambda_delta(c, x)))
    }

    /// Matrix form of an element supported on `Δ`:
    /// `(g_i A, g) ↦ E_{ji}(g_j⁻¹ g g_i)` where `g g_i A = g_j A`.
    pub fn eta(&self, comp: &Component, x: &GroupoidElement) -> Result<GroupRingMatrix, GroupoidError> {
        let g = self.group();
        let mut m = GroupRingMatrix::zero(x.field(), comp.n());
        for (a, c) in x.terms() {
            let i = comp.position(a.source).ok_or(GroupoidError::NotInComponent)?;
            let j = comp.position(self.target(*a)).ok_or(GroupoidError::NotInComponent)?;
            let (gi, gj) = (comp.transversal()[i], comp.transversal()[j]);
            let h = g.mul(g.inv(gj), g.mul(a.elem, gi));
            if !comp.stabilizer().contains(h) {
                return Err(GroupoidError::InvariantViolation(format!("{h} is not in the isotropy group")));
            }
            m.add_entry(j, i, h, c.clone());
        }
        Ok(m)
    }

    /// Inverse of [`eta`](Self::eta): `E_{ji}(h) ↦ (g_i A, g_j h g_i⁻¹)`.
    pub fn eta_inverse(&self, comp: &Component, m: &GroupRingMatrix) -> GroupoidElement {
        let g = self.group();
        let mut out = GroupoidElement::zero(m.field);
        for (&(j, i), ring) in &m.entries {
            for (&h, c) in ring {
                let elem = g.mul(comp.transversal()[j], g.mul(h, g.inv(comp.transversal()[i])));
                out.add_term(Arrow { source: comp.vertices()[i], elem }, c.clone());
            }
        }
        out
    }

    /// `M_g = η(λ_Δ([g]))`, a monomial matrix over the isotropy group.
    pub fn elementary_matrix(&self, comp: &Component, g: usize) -> Result<MonomialMatrix, GroupoidError> {
        let k = crate::exel::PartialGroupAlgebra::new(self.group(), Field::Rational);
        let m = self.eta(comp, &self.lambda_delta(comp, &k.generator(g)))?;
        let mut cols = vec![None; comp.n()];
        for (&(j, i), ring) in &m.entries {
            let mut it = ring.iter();
            match (it.next(), it.next()) {
                (Some((&h, c)), None) if c.is_one() && cols[i].is_none() => cols[i] = Some((j, h)),
                _ => return Err(GroupoidError::InvariantViolation("M_g is not monomial".into())),
            }
        }
        let mut rows_seen = vec![false; comp.n()];
        for &(j, _) in cols.iter().flatten() {
            if std::mem::replace(&mut rows_seen[j], true) {
                return Err(GroupoidError::InvariantViolation("M_g is not monomial".into()));
            }
        }
        Ok(MonomialMatrix { cols })
    }
}

/// `n × n` matrix with entries in the group algebra of the isotropy group,
/// entries stored as maps from element index to coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingMatrix {
    field: Field,
    n: usize,
    entries: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>>,
}

impl GroupRingMatrix {
    pub fn zero(field: Field, n: usize) -> Self {
        GroupRingMatrix { field, n, entries: BTreeMap::new() }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = GroupRingMatrix::zero(field, n);
        for i in 0..n {
            m.add_entry(i, i, 0, Scalar::one(field));
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Coefficient of `h` in entry `(row, col)`.
    pub fn coefficient(&self, row: usize, col: usize, h: usize) -> Scalar {
        self.entries
            .get(&(row, col))
            .and_then(|r| r.get(&h))
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn add_entry(&mut self, row: usize, col: usize, h: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let ring = self.entries.entry((row, col)).or_default();
        let v = match ring.get(&h) {
            Some(old) => old + &c,
            None => c,
        };
        if v.is_zero() {
            ring.remove(&h);
        } else {
            ring.insert(h, v);
        }
        if ring.is_empty() {
            self.entries.remove(&(row, col));
        }
    }

    pub fn add(&self, other: &GroupRingMatrix) -> GroupRingMatrix {
        let mut out = self.clone();
        for (&(r, c), ring) in &other.entries {
            for (&h, v) in ring {
                out.add_entry(r, c, h, v.clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &GroupRingMatrix, group: &FiniteGroup) -> GroupRingMatrix {
        let mut out = GroupRingMatrix::zero(self.field, self.n);
        for (&(r, k), a) in &self.entries {
            for (&(k2, c), b) in other.entries.range((k, 0)..(k + 1, 0)) {
                debug_assert_eq!(k, k2);
                for (&h1, x) in a {
                    for (&h2, y) in b {
                        out.add_entry(r, c, group.mul(h1, h2), x * y);
                    }
                }
            }
        }
        out
    }
}

/// Matrix over `KH` with at most one nonzero entry in each row and column,
/// each such entry a single group element; `cols[i] = Some((j, h))` means
/// entry `(j, i)` is `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMatrix {
    cols: Vec<Option<(usize, usize)>>,
}

impl MonomialMatrix {
    pub fn identity(n: usize) -> Self {
        MonomialMatrix { cols: (0..n).map(|i| Some((i, 0))).collect() }
    }

    pub fn n(&self) -> usize {
        self.cols.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.cols[col].filter(|(j, _)| *j == row).map(|(_, h)| h)
    }

    pub fn columns(&self) -> &[Option<(usize, usize)>] {
        &self.cols
    }

    pub fn mul(&self, other: &MonomialMatrix, group: &FiniteGroup) -> MonomialMatrix {
        let cols = other
            .cols
            .iter()
            .map(|c| c.and_then(|(k, h2)| self.cols[k].map(|(j, h1)| (j, group.mul(h1, h2)))))
            .collect();
        MonomialMatrix { cols }
    }

    /// Transpose with every entry inverted.
    pub fn star(&self, group: &FiniteGroup) -> MonomialMatrix {
        let mut cols = vec![None; self.n()];
        for (i, c) in self.cols.iter().enumerate() {
            if let Some((j, h)) = c {
                cols[*j] = Some((i, group.inv(*h)));
            }
        }
        MonomialMatrix { cols }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exel::PartialGroupAlgebra;
    use crate::groupoid::{build_groupoid, DEFAULT_MAX_ORDER};
    use crate::groups::{build_named_group, BitSet};

    #[test]
    fn c3_two_vertex_component() {
        let g = build_named_group("C3").unwrap();
        let gd = build_groupoid(&g, DEFAULT_MAX_ORDER).unwrap();
        let comp = &gd.components()[1];
        let k = PartialGroupAlgebra::new(&g, Field::Rational);
        // λ([g]) = ({1, g²}, g)
        let lg = gd.lambda_delta(comp, &k.generator(1));
        assert_eq!(lg, GroupoidElement::arrow(Field::Rational, Arrow { source: BitSet::from_elements([0, 2]), elem: 1 }));
        // η(({1, g}, g²)) = E_21(1)
        let a = GroupoidElement::arrow(Field::Rational, Arrow { source: BitSet::from_elements([0, 1]), elem: 2 });
        let m = gd.eta(comp, &a).unwrap();
        assert_eq!(m.coefficient(1, 0, 0), Scalar::one(Field::Rational));
        assert_eq!(gd.eta_inverse(comp, &m), a);
        let mg = gd.elementary_matrix(comp, 1).unwrap();
        assert_eq!(mg.columns(), &[None, Some((0, 0))]);
    }

    #[test]
    fn lambda_is_multiplicative() {
        for name in ["C3", "C2xC2"] {
            let g = build_named_group(name).unwrap();
            let gd = build_groupoid(&g, DEFAULT_MAX_ORDER).unwrap();
            let k = PartialGroupAlgebra::new(&g, Field::Rational);
            let basis = k.canonical_basis();
            for x in &basis {
                for y in &basis {
                    let (x, y) = (k.basis(x.clone()), k.basis(y.clone()));
                    assert_eq!(gd.lambda(&k.mul(&x, &y)), gd.mul(&gd.lambda(&x), &gd.lambda(&y)));
                }
            }
            assert_eq!(gd.lambda(&k.one()).terms().count(), 1 << (g.order() - 1));
        }
    }
}
