use crate::groupoid::{GroupRep, PartialRepModule, Side};
use crate::groups::{FiniteGroup, Group};
use crate::linalg::{Field, Scalar, SparseMatrix};

use super::resolution::prefix_set;
use super::space::{encode, Space};
use super::{check_cap, HomologyError};

/// Coefficients for the bar complexes: a module in a basis adapted to the
/// idempotents `e_g`, together with the acting elements.
///
/// For partial coefficients every coordinate lies in one summand `e_A V` and
/// `blocks[k]` is the mask of `A`; the summand `e_{(x)} V` of a tuple is
/// spanned by the coordinates whose mask contains the prefix set of `x`.
/// Ordinary coefficients use one block containing everything.
pub(crate) struct CoefficientSystem<'g> {
    group: &'g FiniteGroup,
    elems: Vec<usize>,
    local: Vec<Option<usize>>,
    partial: bool,
    field: Field,
    blocks: Vec<u64>,
    /// `cols[g][j]`: column `j` of the action of local element `g`.
    cols: Vec<Vec<Vec<(usize, Scalar)>>>,
}

fn columns_of(m: &SparseMatrix) -> Vec<Vec<(usize, Scalar)>> {
    let t = m.transpose();
    (0..m.ncols()).map(|j| t.row(j).entries().to_vec()).collect()
}

fn is_diagonal(m: &SparseMatrix) -> bool {
    m.entries().all(|(r, c, v)| r == c && v.is_one())
}

impl<'g> CoefficientSystem<'g> {
    /// A left module over the partial group algebra of `group`.
    pub fn partial(group: &'g FiniteGroup, v: &PartialRepModule) -> Result<Self, HomologyError> {
        if v.group_id() != group.id() {
            return Err(crate::groups::GroupError::GroupMismatch.into());
        }
        if v.side() != Side::Left {
            return Err(HomologyError::InvalidModule("coefficients must be a left module".into()));
        }
        let (field, dim, order) = (v.field(), v.dim(), group.order());
        let idem: Vec<SparseMatrix> = group.elements().map(|g| v.idempotent_matrix(group, g)).collect();
        let (blocks, act): (Vec<u64>, Vec<SparseMatrix>) = if idem.iter().all(is_diagonal) {
            let blocks = (0..dim)
                .map(|k| group.elements().filter(|&g| !idem[g].get(k, k).is_zero()).fold(0u64, |m, g| m | 1 << g))
                .collect();
            (blocks, group.elements().map(|g| v.matrix(g).clone()).collect())
        } else {
            let id = SparseMatrix::identity(field, dim);
            let mut basis = Vec::with_capacity(dim);
            let mut blocks = Vec::with_capacity(dim);
            for i in 0..1u64 << (order - 1) {
                let mask = 1 | i << 1;
                let mut p = id.clone();
                for g in group.elements() {
                    let factor = if mask >> g & 1 == 1 { idem[g].clone() } else { id.sub(&idem[g])? };
                    p = p.mul(&factor)?;
                    if p.is_zero() {
                        break;
                    }
                }
                for b in id.sub(&p)?.kernel_basis() {
                    basis.push(b);
                    blocks.push(mask);
                }
            }
            if basis.len() != dim {
                return Err(HomologyError::InvalidModule("the idempotents e_g do not decompose the module".into()));
            }
            let t = SparseMatrix::from_columns(field, dim, &basis)?;
            let ti = t.inverse()?;
            let act = group.elements().map(|g| ti.mul(v.matrix(g))?.mul(&t)).collect::<Result<_, _>>()?;
            (blocks, act)
        };
        Ok(CoefficientSystem {
            group,
            elems: group.elements().collect(),
            local: group.elements().map(Some).collect(),
            partial: true,
            field,
            blocks,
            cols: act.iter().map(columns_of).collect(),
        })
    }

    /// A representation of a subgroup, for ordinary group (co)homology.
    pub fn ordinary(group: &'g FiniteGroup, u: &GroupRep) -> Result<Self, HomologyError> {
        if u.group_id() != group.id() {
            return Err(crate::groups::GroupError::GroupMismatch.into());
        }
        let elems = u.elements().to_vec();
        let mut local = vec![None; group.order()];
        for (i, &g) in elems.iter().enumerate() {
            local[g] = Some(i);
        }
        Ok(CoefficientSystem {
            group,
            cols: elems.iter().map(|&g| columns_of(u.matrix(g))).collect(),
            elems,
            local,
            partial: false,
            field: u.field(),
            blocks: vec![u64::MAX; u.dim()],
        })
    }

    pub fn dim(&self) -> usize {
        self.blocks.len()
    }

    fn h(&self) -> usize {
        self.elems.len()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.local[self.group.mul(self.elems[a], self.elems[b])].expect("closed subgroup")
    }

    fn inv(&self, a: usize) -> usize {
        self.local[self.group.inv(self.elems[a])].expect("closed subgroup")
    }

    pub fn space(&self, n: usize, cap: usize) -> Result<Space, HomologyError> {
        check_cap(self.h(), n, self.dim(), cap)?;
        Ok(if self.partial {
            Space::new(self.h(), n, &self.blocks, |x| prefix_set(self.group, x).0)
        } else {
            Space::new(self.h(), n, &self.blocks, |_| 0)
        })
    }

    fn sign(&self, i: usize) -> Scalar {
        Scalar::from_int(self.field, if i.is_multiple_of(2) { 1 } else { -1 })
    }

    fn merge(&self, x: &[usize], i: usize) -> Vec<usize> {
        let mut y = x[..i - 1].to_vec();
        y.push(self.mul(x[i - 1], x[i]));
        y.extend_from_slice(&x[i + 1..]);
        y
    }

    /// `d_n : C_n → C_{n-1}` of `𝒫* ⊗ V`:
    /// `(x, v) ↦ (x₂…, e_{(x₂…)}[x₁⁻¹]v) + Σ (-1)^i (…x_i x_{i+1}…, v) + (-1)^n (x₁…x_{n-1}, v)`.
    pub fn boundary(&self, n: usize, cap: usize) -> Result<SparseMatrix, HomologyError> {
        let h = self.h();
        let (src, dst) = (self.space(n, cap)?, self.space(n - 1, cap)?);
        let mut triplets = Vec::new();
        for t in 0..src.tuples() {
            let x = src.decode(t);
            let first = encode(&x[1..], h);
            let merged: Vec<usize> = (1..n).map(|i| encode(&self.merge(&x, i), h)).collect();
            let last = encode(&x[..n - 1], h);
            let back = self.inv(x[0]);
            for (ci, &k) in src.coords(t).iter().enumerate() {
                let (k, col) = (k as usize, src.offset(t) + ci);
                for (r, v) in &self.cols[back][k] {
                    if let Some(row) = dst.index(first, *r) {
                        triplets.push((row, col, v.clone()));
                    }
                }
                for (i, &y) in merged.iter().enumerate() {
                    triplets.push((dst.index(y, k).expect("smaller support"), col, self.sign(i + 1)));
                }
                triplets.push((dst.index(last, k).expect("smaller support"), col, self.sign(n)));
            }
        }
        Ok(SparseMatrix::from_triplets(self.field, dst.len(), src.len(), triplets)?)
    }

    /// `δ^n : C^n → C^{n+1}` of `Hom(𝒫, V)`:
    /// `(δφ)_x = [x₁]φ_{(x₂…)} + Σ (-1)^i e_{(x)} φ_{(…x_i x_{i+1}…)} + (-1)^{n+1} e_{(x)} φ_{(x₁…x_n)}`.
    pub fn coboundary(&self, n: usize, cap: usize) -> Result<SparseMatrix, HomologyError> {
        let h = self.h();
        let (src, dst) = (self.space(n, cap)?, self.space(n + 1, cap)?);
        let mut triplets = Vec::new();
        for t in 0..dst.tuples() {
            let x = dst.decode(t);
            let first = encode(&x[1..], h);
            for (cj, &j) in src.coords(first).iter().enumerate() {
                let col = src.offset(first) + cj;
                for (r, v) in &self.cols[x[0]][j as usize] {
                    if let Some(row) = dst.index(t, *r) {
                        triplets.push((row, col, v.clone()));
                    }
                }
            }
            let mut faces: Vec<(usize, Scalar)> = (1..=n).map(|i| (encode(&self.merge(&x, i), h), self.sign(i))).collect();
            faces.push((encode(&x[..n], h), self.sign(n + 1)));
            for (ri, &k) in dst.coords(t).iter().enumerate() {
                let row = dst.offset(t) + ri;
                for (y, s) in &faces {
                    triplets.push((row, src.index(*y, k as usize).expect("smaller support"), s.clone()));
                }
            }
        }
        Ok(SparseMatrix::from_triplets(self.field, dst.len(), src.len(), triplets)?)
    }
}
