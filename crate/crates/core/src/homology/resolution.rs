//! The resolution of `B` over the partial group algebra, in homogeneous
//! coordinates `(g₁, …, g_n)` and in bar coordinates `[x₁ | … | x_n]`.

use serde::Serialize;

use crate::exel::{AlgElem, PartialGroupAlgebra};
use crate::groups::{BitSet, ElemSet, FiniteGroup, Group};
use crate::linalg::{Field, Scalar, SparseMatrix};

use super::space::{decode, encode, Space};
use super::{check_cap, HomologyError, DEFAULT_COLUMN_CAP};

fn primitive_blocks(group: &FiniteGroup) -> Vec<u64> {
    (0..1usize << (group.order() - 1)).map(|i| 1 | (i as u64) << 1).collect()
}

/// `P_n = ⊕ B(g₁, …, g_n)`, each summand spanned by the primitive idempotents
/// `e_A` with `A ⊇ {1, g₁, …, g_n}`.
fn homogeneous_space(group: &FiniteGroup, n: usize) -> Space {
    Space::new(group.order(), n, &primitive_blocks(group), |x| x.iter().fold(1u64, |m, &g| m | 1 << g))
}

/// `∂_n (g₁, …, g_n) = Σ (-1)^{i-1} e_{g_i} (g₁, …, ĝ_i, …, g_n)` on `P_n → P_{n-1}`.
pub fn homogeneous_differential(group: &FiniteGroup, field: Field, n: usize) -> Result<SparseMatrix, HomologyError> {
    if n == 0 {
        return Err(HomologyError::BadDegree(0));
    }
    let h = group.order();
    check_cap(h, n, 1 << (h - 1), DEFAULT_COLUMN_CAP)?;
    let (src, dst) = (homogeneous_space(group, n), homogeneous_space(group, n - 1));
    let mut triplets = Vec::new();
    for t in 0..src.tuples() {
        let x = src.decode(t);
        for (ci, &k) in src.coords(t).iter().enumerate() {
            for i in 0..n {
                let mut y = x.clone();
                y.remove(i);
                let sign = if i % 2 == 0 { 1 } else { -1 };
                let row = dst.index(encode(&y, h), k as usize).expect("face of an admitted tuple");
                triplets.push((row, src.offset(t) + ci, Scalar::from_int(field, sign)));
            }
        }
    }
    Ok(SparseMatrix::from_triplets(field, dst.len(), src.len(), triplets)?)
}

/// `s_n (g₁, …, g_n) = (1, g₁, …, g_n)` on `P_n → P_{n+1}`.
pub fn contracting_homotopy(group: &FiniteGroup, field: Field, n: usize) -> Result<SparseMatrix, HomologyError> {
    let h = group.order();
    check_cap(h, n + 1, 1 << (h - 1), DEFAULT_COLUMN_CAP)?;
    let (src, dst) = (homogeneous_space(group, n), homogeneous_space(group, n + 1));
    let mut triplets = Vec::new();
    for t in 0..src.tuples() {
        for (ci, &k) in src.coords(t).iter().enumerate() {
            // prepending the identity leaves the tuple code unchanged
            let row = dst.index(t, k as usize).expect("identity is in every vertex");
            triplets.push((row, src.offset(t) + ci, Scalar::one(field)));
        }
    }
    Ok(SparseMatrix::from_triplets(field, dst.len(), src.len(), triplets)?)
}

/// Checks `∂₁ s₀ = id` on `P₀` (degree 0) or `s_{n-1} ∂_n + ∂_{n+1} s_n = id` on `P_n`.
pub fn homotopy_identity_holds(group: &FiniteGroup, field: Field, n: usize) -> Result<bool, HomologyError> {
    let s_n = contracting_homotopy(group, field, n)?;
    let d_up = homogeneous_differential(group, field, n + 1)?;
    let mut total = d_up.mul(&s_n)?;
    if n > 0 {
        let d_n = homogeneous_differential(group, field, n)?;
        let s_down = contracting_homotopy(group, field, n - 1)?;
        total = total.add(&s_down.mul(&d_n)?)?;
    }
    Ok(total == SparseMatrix::identity(field, total.nrows()))
}

/// `e_{(x₁, …, x_n)} = e_{x₁} e_{x₁x₂} ⋯ e_{x₁⋯x_n}` as the set `{1, x₁, x₁x₂, …}`.
pub fn prefix_set(group: &FiniteGroup, x: &[usize]) -> BitSet {
    let mut acc = 0;
    let mut set = BitSet::singleton(0);
    for &g in x {
        acc = group.mul(acc, g);
        set.insert(acc);
    }
    set
}

/// One term `c · [y₁ | … | y_m]` of a bar boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarTerm {
    pub coefficient: AlgElem<FiniteGroup>,
    pub tuple: Vec<usize>,
}

/// `∂[x₁|…|x_n] = [x₁]·[x₂|…|x_n] + Σ_{i<n} (-1)^i e_{x₁⋯x_i}[…|x_i x_{i+1}|…] + (-1)^n e_{x₁⋯x_n}[x₁|…|x_{n-1}]`.
pub fn bar_boundary(group: &FiniteGroup, field: Field, x: &[usize]) -> Vec<BarTerm> {
    let k = PartialGroupAlgebra::new(group, field);
    let n = x.len();
    if n == 0 {
        return Vec::new();
    }
    let sign = |i: usize| Scalar::from_int(field, if i.is_multiple_of(2) { 1 } else { -1 });
    let mut out = vec![BarTerm { coefficient: k.generator(x[0]), tuple: x[1..].to_vec() }];
    let mut acc = 0;
    for i in 1..n {
        acc = group.mul(acc, x[i - 1]);
        let mut y = x[..i - 1].to_vec();
        y.push(group.mul(x[i - 1], x[i]));
        y.extend_from_slice(&x[i + 1..]);
        out.push(BarTerm { coefficient: k.idempotent(acc).scale(&sign(i)), tuple: y });
    }
    acc = group.mul(acc, x[n - 1]);
    out.push(BarTerm { coefficient: k.idempotent(acc).scale(&sign(n)), tuple: x[..n - 1].to_vec() });
    out
}

/// Basis element `e_A ⊗ [x₁|…|x_n]` of the `B`-coefficient bar complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BarBasisElement {
    pub tuple: Vec<usize>,
    pub set: BitSet,
}

impl BarBasisElement {
    pub fn render(&self, group: &FiniteGroup) -> String {
        let names: Vec<String> = self.tuple.iter().map(|&g| group.elem_name(g)).collect();
        let set: Vec<String> = self.set.elements().into_iter().map(|g| group.elem_name(g)).collect();
        format!("e{{{}}}[{}]", set.join(","), names.join("|"))
    }
}

/// Degree `n` basis of the `B`-coefficient bar complex: `(x, A)` with
/// `A ⊇ {1, x₁, x₁x₂, …, x₁⋯x_n}`.
pub fn bar_basis(group: &FiniteGroup, n: usize) -> Result<Vec<BarBasisElement>, HomologyError> {
    let h = group.order();
    check_cap(h, n, 1 << (h - 1), DEFAULT_COLUMN_CAP)?;
    let space = Space::new(h, n, &primitive_blocks(group), |x| prefix_set(group, x).0);
    let mut out = Vec::with_capacity(space.len());
    for t in 0..space.tuples() {
        let tuple = decode(t, n, h);
        for &k in space.coords(t) {
            out.push(BarBasisElement { tuple: tuple.clone(), set: BitSet(1 | (k as u64) << 1) });
        }
    }
    Ok(out)
}

/// Matrix of the differential `d_n` of `B ⊗ 𝒫` in the primitive basis, with
/// rows and columns labelled by [`BarBasisElement::render`].
pub fn bar_differential(group: &FiniteGroup, field: Field, n: usize) -> Result<SparseMatrix, HomologyError> {
    if n == 0 {
        return Err(HomologyError::BadDegree(0));
    }
    let b = crate::groupoid::b_module(group, crate::groupoid::Side::Left, field)?;
    let sys = super::coefficients::CoefficientSystem::partial(group, &b)?;
    let m = sys.boundary(n, DEFAULT_COLUMN_CAP)?;
    let rows = bar_basis(group, n - 1)?.iter().map(|e| e.render(group)).collect();
    let cols = bar_basis(group, n)?.iter().map(|e| e.render(group)).collect();
    Ok(m.with_labels(rows, cols)?)
}
