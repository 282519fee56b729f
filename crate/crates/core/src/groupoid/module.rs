use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exel::{s_mul, AlgElem, IdempotentUniverse, PartialGroupAlgebra};
use crate::groups::{BitSet, ElemSet, FiniteGroup, GroupId, Group, Subgroup};
use crate::linalg::{Field, Scalar, SparseMatrix};

use super::structure::{Component, Groupoid};
use super::GroupoidError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// Checks the partial representation axioms for a family `g ↦ ρ(g)` under
/// the given product: `ρ(1) = 1`, `ρ(g)ρ(h)ρ(h⁻¹) = ρ(gh)ρ(h⁻¹)` and
/// `ρ(g⁻¹)ρ(g)ρ(h) = ρ(g⁻¹)ρ(gh)`.
pub fn satisfies_partial_rep_axioms<M: PartialEq>(
    group: &FiniteGroup,
    rho: impl Fn(usize) -> M,
    mul: impl Fn(&M, &M) -> M,
    identity: &M,
) -> bool {
    if rho(0) != *identity {
        return false;
    }
    let mats: Vec<M> = group.elements().map(&rho).collect();
    for g in group.elements() {
        for h in group.elements() {
            let (gi, hi, gh) = (group.inv(g), group.inv(h), group.mul(g, h));
            let lhs = mul(&mul(&mats[g], &mats[h]), &mats[hi]);
            let rhs = mul(&mats[gh], &mats[hi]);
            if lhs != rhs {
                return false;
            }
            let lhs = mul(&mul(&mats[gi], &mats[g]), &mats[h]);
            let rhs = mul(&mats[gi], &mats[gh]);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// A finite dimensional module over the partial group algebra, given by the
/// matrices of the generators. For a right module `matrix(g)` is the map
/// `v ↦ v·[g]`.
#[derive(Clone, Debug)]
pub struct PartialRepModule {
    group: GroupId,
    field: Field,
    side: Side,
    dim: usize,
    matrices: Vec<SparseMatrix>,
    label: String,
}

impl PartialRepModule {
    /// Validates shapes and the partial representation axioms (in reversed
    /// order of composition for right modules).
    pub fn new(group: &FiniteGroup, side: Side, matrices: Vec<SparseMatrix>, label: &str) -> Result<Self, GroupoidError> {
        if matrices.len() != group.order() {
            return Err(GroupoidError::InvalidModule("one matrix per group element is required".into()));
        }
        let dim = matrices[0].nrows();
        let field = matrices[0].field();
        if matrices.iter().any(|m| m.nrows() != dim || m.ncols() != dim || m.field() != field) {
            return Err(GroupoidError::InvalidModule("matrices must be square of one size over one field".into()));
        }
        let m = PartialRepModule { group: group.id(), field, side, dim, matrices, label: label.to_string() };
        let id = SparseMatrix::identity(field, dim);
        let ok = match side {
            Side::Left => satisfies_partial_rep_axioms(group, |g| m.matrices[g].clone(), |a, b| a.mul(b).expect("square"), &id),
            Side::Right => satisfies_partial_rep_axioms(group, |g| m.matrices[g].clone(), |a, b| b.mul(a).expect("square"), &id),
        };
        if !ok {
            return Err(GroupoidError::InvalidModule(format!("{label}: partial representation axioms fail")));
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn group_id(&self) -> GroupId {
        self.group
    }

    pub fn matrix(&self, g: usize) -> &SparseMatrix {
        &self.matrices[g]
    }

    /// Matrix of `e_g`: `π(g)π(g⁻¹)` on the left, `ρ(g⁻¹)ρ(g)` on the right.
    pub fn idempotent_matrix(&self, group: &FiniteGroup, g: usize) -> SparseMatrix {
        let (a, b) = (&self.matrices[g], &self.matrices[group.inv(g)]);
        match self.side {
            Side::Left => a.mul(b),
            Side::Right => b.mul(a),
        }
        .expect("square matrices")
    }

    /// Matrix of an arbitrary algebra element.
    pub fn action(&self, group: &FiniteGroup, x: &AlgElem<FiniteGroup>) -> Result<SparseMatrix, GroupoidError> {
        if group.id() != self.group {
            return Err(GroupoidError::Group(crate::groups::GroupError::GroupMismatch));
        }
        let mut out = SparseMatrix::zero(self.field, self.dim, self.dim);
        for (s, c) in x.terms() {
            let mut m = SparseMatrix::identity(self.field, self.dim);
            for a in s.set().elements() {
                let e = self.idempotent_matrix(group, a);
                m = match self.side {
                    Side::Left => m.mul(&e)?,
                    Side::Right => e.mul(&m)?,
                };
            }
            m = match self.side {
                Side::Left => m.mul(&self.matrices[s.elem()])?,
                Side::Right => self.matrices[s.elem()].mul(&m)?,
            };
            out = out.add(&m.scale(c)?)?;
        }
        Ok(out)
    }

    /// The left module `v ↦ v·x*` attached to a right module; left modules are returned unchanged.
    pub fn to_left(&self, group: &FiniteGroup) -> PartialRepModule {
        match self.side {
            Side::Left => self.clone(),
            Side::Right => PartialRepModule {
                side: Side::Left,
                matrices: group.elements().map(|g| self.matrices[group.inv(g)].clone()).collect(),
                label: format!("{}*", self.label),
                ..self.clone()
            },
        }
    }
}

/// Linear representation of a subgroup `H` of a finite group, with matrices
/// indexed by parent element indices.
#[derive(Clone, Debug)]
pub struct GroupRep {
    group: GroupId,
    elements: Vec<usize>,
    field: Field,
    dim: usize,
    matrices: BTreeMap<usize, SparseMatrix>,
    label: String,
}

impl GroupRep {
    /// Validates that `h ↦ U(h)` is a homomorphism on `subgroup`.
    pub fn new(
        parent: &FiniteGroup,
        subgroup: &Subgroup,
        matrices: BTreeMap<usize, SparseMatrix>,
        label: &str,
    ) -> Result<Self, GroupoidError> {
        let elements = subgroup.elements().to_vec();
        let first = matrices.get(&0).ok_or_else(|| GroupoidError::InvalidModule("missing U(1)".into()))?;
        let (dim, field) = (first.nrows(), first.field());
        for &h in &elements {
            let m = matrices.get(&h).ok_or_else(|| GroupoidError::InvalidModule(format!("missing U({h})")))?;
            if m.nrows() != dim || m.ncols() != dim || m.field() != field {
                return Err(GroupoidError::InvalidModule("inconsistent matrix shapes".into()));
            }
        }
        if *first != SparseMatrix::identity(field, dim) {
            return Err(GroupoidError::InvalidModule("U(1) is not the identity".into()));
        }
        for &a in &elements {
            for &b in &elements {
                if matrices[&a].mul(&matrices[&b])? != matrices[&parent.mul(a, b)] {
                    return Err(GroupoidError::InvalidModule(format!("{label} is not a homomorphism")));
                }
            }
        }
        Ok(GroupRep { group: parent.id(), elements, field, dim, matrices, label: label.to_string() })
    }

    pub fn trivial(parent: &FiniteGroup, subgroup: &Subgroup, field: Field) -> Self {
        let matrices = subgroup.elements().iter().map(|&h| (h, SparseMatrix::identity(field, 1))).collect();
        GroupRep::new(parent, subgroup, matrices, "trivial").expect("trivial representation")
    }

    /// Left regular representation on `KH`, basis ordered as the subgroup's elements.
    pub fn regular(parent: &FiniteGroup, subgroup: &Subgroup, field: Field) -> Self {
        let el = subgroup.elements();
        let matrices = el
            .iter()
            .map(|&h| {
                let triplets = el.iter().enumerate().map(|(c, &x)| {
                    let r = el.binary_search(&parent.mul(h, x)).expect("closed subgroup");
                    (r, c, Scalar::one(field))
                });
                (h, SparseMatrix::from_triplets(field, el.len(), el.len(), triplets).expect("in range"))
            })
            .collect();
        GroupRep::new(parent, subgroup, matrices, "regular").expect("regular representation")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn group_id(&self) -> GroupId {
        self.group
    }

    pub fn matrix(&self, h: usize) -> &SparseMatrix {
        &self.matrices[&h]
    }
}

impl Groupoid<'_> {
    /// The induced module `W ⊗_{KH} U`, realised on `U^n` with `[g]` acting
    /// through the blocks of `M_g`.
    pub fn induce_module(&self, comp: &Component, u: &GroupRep) -> Result<PartialRepModule, GroupoidError> {
        let group = self.group();
        if u.group != group.id() || u.elements != comp.stabilizer().elements() {
            return Err(GroupoidError::InvalidModule("representation is not of the isotropy group".into()));
        }
        let (n, d) = (comp.n(), u.dim);
        let mut matrices = Vec::with_capacity(group.order());
        for g in group.elements() {
            let mg = self.elementary_matrix(comp, g)?;
            let mut triplets = Vec::new();
            for (i, c) in mg.columns().iter().enumerate() {
                if let Some((j, h)) = c {
                    for (r, cc, v) in u.matrix(*h).entries() {
                        triplets.push((j * d + r, i * d + cc, v.clone()));
                    }
                }
            }
            matrices.push(SparseMatrix::from_triplets(u.field, n * d, n * d, triplets)?);
        }
        PartialRepModule::new(group, Side::Left, matrices, &format!("W{}⊗{}", comp.index(), u.label))
    }
}

/// The partial group algebra acting on itself by multiplication with `[g]`
/// (on the left or right), in the canonical basis.
pub fn regular_module(group: &FiniteGroup, side: Side, field: Field) -> Result<PartialRepModule, GroupoidError> {
    let k = PartialGroupAlgebra::new(group, field);
    let basis = k.canonical_basis();
    let index: BTreeMap<_, usize> = basis.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    let mut matrices = Vec::new();
    for g in group.elements() {
        let gen = k.generator_elem(g);
        let triplets = basis.iter().enumerate().map(|(c, s)| {
            let t = match side {
                Side::Left => s_mul(group, &gen, s),
                Side::Right => s_mul(group, s, &gen),
            };
            (index[&t], c, Scalar::one(field))
        });
        matrices.push(SparseMatrix::from_triplets(field, basis.len(), basis.len(), triplets)?);
    }
    PartialRepModule::new(group, side, matrices, "regular")
}

/// `B` in its primitive idempotent basis (index `i` is the set with mask
/// `1 | i << 1`): on the left `[g]·e_A = e_{gA}` when `g⁻¹ ∈ A`; on the right
/// `e_A·[g] = e_{g⁻¹A}` when `g ∈ A`; otherwise zero.
pub fn b_module(group: &FiniteGroup, side: Side, field: Field) -> Result<PartialRepModule, GroupoidError> {
    let u = IdempotentUniverse::whole(group);
    let m = u.num_primitives();
    let mut matrices = Vec::new();
    for g in group.elements() {
        let (x, need) = match side {
            Side::Left => (g, group.inv(g)),
            Side::Right => (group.inv(g), g),
        };
        let triplets = (0..m).filter_map(|i| {
            let a = BitSet(1 | (i as u64) << 1);
            a.contains(need).then(|| ((group.translate(x, &a).0 >> 1) as usize, i, Scalar::one(field)))
        });
        matrices.push(SparseMatrix::from_triplets(field, m, m, triplets)?);
    }
    PartialRepModule::new(group, side, matrices, "B")
}
