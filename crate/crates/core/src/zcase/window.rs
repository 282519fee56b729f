use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::exel::{AlgElem, AlgebraElement, PartialGroupAlgebra, SElem, SElement};
use crate::groups::{ElemSet, IntSet, Integers};
use crate::linalg::{kernel_basis, Field, SparseMatrix, SparseVector, Subspace};

use super::generators::f_z;
use super::ZError;

fn diameter(set: &IntSet) -> i64 {
    match (set.min(), set.max()) {
        (Some(lo), Some(hi)) => hi - lo,
        _ => 0,
    }
}

/// All `A ∋ 0` with `max A - min A ≤ n`, ordered by `(min, max)` then by
/// the remaining members.
pub fn sets_in_window(n: i64) -> Vec<IntSet> {
    let mut out = Vec::new();
    for lo in -n..=0 {
        for hi in 0..=lo + n {
            let free: Vec<i64> = (lo + 1..hi).filter(|&x| x != 0).collect();
            for bits in 0u64..1 << free.len() {
                let mut set = IntSet::from_elements([lo, 0, hi]);
                for (p, &x) in free.iter().enumerate() {
                    if bits >> p & 1 == 1 {
                        set.insert(x);
                    }
                }
                out.push(set);
            }
        }
    }
    out
}

/// Canonical basis elements `(A, i)` of `K_par ℤ` with `A` in the window.
#[derive(Clone, Debug)]
pub struct Window {
    n: i64,
    elements: Vec<SElem<Integers>>,
    index: HashMap<SElem<Integers>, usize>,
}

impl Window {
    pub fn new(n: i64) -> Result<Self, ZError> {
        if n < 0 {
            return Err(ZError::WindowTooSmall(format!("negative window {n}")));
        }
        let elements: Vec<SElem<Integers>> = sets_in_window(n)
            .into_iter()
            .flat_map(|set| set.elements().into_iter().map(move |i| SElement { set: set.clone(), elem: i }))
            .collect();
        let index = elements.iter().enumerate().map(|(p, s)| (s.clone(), p)).collect();
        Ok(Window { n, elements, index })
    }

    pub fn bound(&self) -> i64 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[SElem<Integers>] {
        &self.elements
    }

    pub fn contains_set(&self, set: &IntSet) -> bool {
        set.contains(0) && diameter(set) <= self.n
    }

    pub fn index_of(&self, s: &SElem<Integers>) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Coordinates in the window basis; fails rather than dropping terms.
    pub fn coordinates(&self, x: &AlgElem<Integers>) -> Result<SparseVector, ZError> {
        let mut entries = Vec::with_capacity(x.len());
        for (s, c) in x.terms() {
            entries.push((self.index_of(s).ok_or(ZError::OutsideWindow)?, c.clone()));
        }
        Ok(SparseVector::from_entries(x.field(), self.len(), entries)?)
    }

    pub fn element(&self, v: &SparseVector) -> AlgElem<Integers> {
        let mut out = AlgebraElement::zero(v.field());
        for (p, c) in v.entries() {
            out.add_term(self.elements[*p].clone(), c.clone());
        }
        out
    }
}

/// Spanning set of `V_k ∩ span(window)`.
#[derive(Clone, Debug)]
pub struct VkBasis {
    pub window: Window,
    pub columns: Vec<SparseVector>,
    /// Products `(A, i) f_j` whose set left the window. Every such product
    /// is a combination of basis elements sharing one set, so it is either
    /// wholly inside or wholly outside and nothing is truncated.
    pub escaped: usize,
}

/// `(A, i) f_j` for every window element and `1 ≤ j ≤ k`, kept when the
/// product lies in the window.
pub fn vk_basis(k: i64, n: i64, field: Field) -> Result<VkBasis, ZError> {
    if k < 1 || n < k + 1 {
        return Err(ZError::WindowTooSmall(format!("need k ≥ 1 and N ≥ k + 1, got k = {k}, N = {n}")));
    }
    let window = Window::new(n)?;
    let z = Integers;
    let alg = PartialGroupAlgebra::new(&z, field);
    let fs: Vec<AlgElem<Integers>> = (1..=k).map(|j| f_z(&alg, j)).collect();
    let mut columns = Vec::new();
    let mut escaped = 0;
    for s in window.elements() {
        let r = alg.basis(s.clone());
        for f in &fs {
            let p = alg.mul(&r, f);
            match window.coordinates(&p) {
                Ok(v) => columns.push(v),
                Err(ZError::OutsideWindow) => escaped += 1,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(VkBasis { window, columns, escaped })
}

/// Coordinates of an element whose terms all have the set `c`, indexed by
/// the position of the group element in `c`.
fn set_coordinates(c: &IntSet, x: &AlgElem<Integers>) -> Result<SparseVector, ZError> {
    let members = c.as_slice();
    let mut entries = Vec::with_capacity(x.len());
    for (s, v) in x.terms() {
        if s.set() != c {
            return Err(ZError::Internal("product left its block".into()));
        }
        let p = members.binary_search(&s.elem()).expect("element lies in its set");
        entries.push((p, v.clone()));
    }
    Ok(SparseVector::from_entries(x.field(), members.len(), entries)?)
}

fn split_by<F: Fn(&SElem<Integers>) -> IntSet>(x: &AlgElem<Integers>, key: F) -> BTreeMap<IntSet, AlgElem<Integers>> {
    let mut out: BTreeMap<IntSet, AlgElem<Integers>> = BTreeMap::new();
    for (s, c) in x.terms() {
        out.entry(key(s)).or_insert_with(|| AlgebraElement::zero(x.field())).add_term(s.clone(), c.clone());
    }
    out
}

fn element(set: IntSet, i: i64) -> Option<SElem<Integers>> {
    (set.contains(0) && set.contains(i)).then_some(SElement { set, elem: i })
}

/// Generators of `V_k` whose product has set `c`: `(A, t) f_j` with
/// `A ∪ {t + j} = c`.
fn vk_block(alg: &PartialGroupAlgebra<Integers>, k: i64, c: &IntSet) -> Result<Vec<SparseVector>, ZError> {
    let mut out = Vec::new();
    for t in c.elements() {
        for j in 1..=k {
            if !c.contains(t + j) {
                continue;
            }
            let f = f_z(alg, j);
            let mut smaller = c.clone();
            smaller.remove(t + j);
            for s in [element(c.clone(), t), element(smaller, t)].into_iter().flatten() {
                out.push(set_coordinates(c, &alg.mul(&alg.basis(s), &f))?);
            }
        }
    }
    Ok(out)
}

/// The block of `R` sent into the set `c` by `r ↦ r f_{k+1}`.
struct Fiber {
    elems: Vec<SElem<Integers>>,
    index: HashMap<SElem<Integers>, usize>,
}

impl Fiber {
    fn new(k: i64, c: &IntSet) -> Self {
        let mut elems = Vec::new();
        for i in c.elements() {
            if c.contains(i + k + 1) {
                elems.push(SElement { set: c.clone(), elem: i });
                let mut smaller = c.clone();
                smaller.remove(i + k + 1);
                elems.extend(element(smaller, i));
            }
        }
        let index = elems.iter().enumerate().map(|(p, s)| (s.clone(), p)).collect();
        Fiber { elems, index }
    }

    fn coordinates(&self, x: &AlgElem<Integers>) -> Result<SparseVector, ZError> {
        let mut entries = Vec::with_capacity(x.len());
        for (s, c) in x.terms() {
            let p = self.index.get(s).ok_or_else(|| ZError::Internal("element outside its fiber".into()))?;
            entries.push((*p, c.clone()));
        }
        Ok(SparseVector::from_entries(x.field(), self.elems.len(), entries)?)
    }
}

fn r_block(k: i64, s: &SElem<Integers>) -> IntSet {
    s.set().with(s.elem() + k + 1)
}

/// Generators of `R(1 - e_{k+1}) + Σ_{j≤k} R e_j` lying in the fiber of `c`:
/// `(A, i) y` for `y ∈ {1 - e_{k+1}, e_1, …, e_k}` with `A` ranging over the
/// sets that can reach `c`.
fn s2_block(alg: &PartialGroupAlgebra<Integers>, k: i64, c: &IntSet, fiber: &Fiber) -> Result<Vec<SparseVector>, ZError> {
    let multipliers: Vec<(i64, AlgElem<Integers>)> =
        std::iter::once((k + 1, alg.one().sub(&alg.idempotent(k + 1)))).chain((1..=k).map(|j| (j, alg.idempotent(j)))).collect();
    let mut out = Vec::new();
    for i in c.elements() {
        if !c.contains(i + k + 1) {
            continue;
        }
        for (j, y) in &multipliers {
            for drop in 0..4u8 {
                let mut set = c.clone();
                if drop & 1 == 1 {
                    set.remove(i + j);
                }
                if drop & 2 == 1 << 1 {
                    set.remove(i + k + 1);
                }
                let Some(s) = element(set, i) else { continue };
                let p = alg.mul(&alg.basis(s), y);
                if !p.is_zero() && p.terms().all(|(t, _)| r_block(k, t) == *c) {
                    out.push(fiber.coordinates(&p)?);
                }
            }
        }
    }
    Ok(out)
}

/// `{r in the fiber of c : r f_{k+1} ∈ V_k}`, from the kernel of `[Φ | V]`.
fn s1_block(alg: &PartialGroupAlgebra<Integers>, k: i64, c: &IntSet, fiber: &Fiber, vk: &[SparseVector]) -> Result<Vec<SparseVector>, ZError> {
    let f = f_z(alg, k + 1);
    let mut columns = Vec::with_capacity(fiber.elems.len() + vk.len());
    for s in &fiber.elems {
        columns.push(set_coordinates(c, &alg.mul(&alg.basis(s.clone()), &f))?);
    }
    columns.extend_from_slice(vk);
    let m = SparseMatrix::from_columns(alg.field(), c.len(), &columns)?;
    Ok(kernel_basis(&m).iter().map(|v| v.truncate(fiber.elems.len())).filter(|v| !v.is_zero()).collect())
}

fn subspace(field: Field, dim: usize, gens: &[SparseVector]) -> Result<Subspace, ZError> {
    let mut s = Subspace::new(field, dim);
    for g in gens {
        s.insert(g)?;
    }
    Ok(s)
}

/// Exact membership in `V_k`, set by set.
pub fn in_vk(alg: &PartialGroupAlgebra<Integers>, k: i64, x: &AlgElem<Integers>) -> Result<bool, ZError> {
    for (c, part) in split_by(x, |s| s.set().clone()) {
        let gens = vk_block(alg, k, &c)?;
        if !subspace(alg.field(), c.len(), &gens)?.contains(&set_coordinates(&c, &part)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact membership in `R(1 - e_{k+1}) + Σ_{j≤k} R e_j`, fiber by fiber.
pub fn in_s2(alg: &PartialGroupAlgebra<Integers>, k: i64, r: &AlgElem<Integers>) -> Result<bool, ZError> {
    for (c, part) in split_by(r, |s| r_block(k, s)) {
        let fiber = Fiber::new(k, &c);
        let gens = s2_block(alg, k, &c, &fiber)?;
        if !subspace(alg.field(), fiber.elems.len(), &gens)?.contains(&fiber.coordinates(&part)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub set: Vec<i64>,
    pub containment: String,
}

/// Comparison of `S₁ = {r : r f_{k+1} ∈ V_k}` with
/// `S₂ = R(1 - e_{k+1}) + Σ_{j≤k} R e_j` over the window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub k: i64,
    #[serde(rename = "N")]
    pub n: i64,
    pub s2_in_s1: bool,
    pub s1_in_s2: bool,
    pub violations: Vec<Violation>,
    pub field: String,
    pub blocks: usize,
    pub window_dim: usize,
    pub dim_s1: usize,
    pub dim_s2: usize,
}

/// `r ↦ r f_{k+1}` sends `(A, i)` into the span of `(A ∪ {i+k+1}, t)`,
/// and the generators of `V_k` and of `S₂` also respect these sets, so
/// both subspaces split into finite blocks indexed by a set `C`. Every
/// block with `C` in the window is computed completely; the comparison
/// involves no truncation.
pub fn quotient_check(k: i64, n: i64, field: Field) -> Result<QuotientReport, ZError> {
    if k < 1 || n < 2 * k + 4 {
        return Err(ZError::WindowTooSmall(format!("need k ≥ 1 and N ≥ 2k + 4, got k = {k}, N = {n}")));
    }
    let z = Integers;
    let alg = PartialGroupAlgebra::new(&z, field);
    let mut report = QuotientReport {
        k,
        n,
        s2_in_s1: true,
        s1_in_s2: true,
        violations: Vec::new(),
        field: field.to_string(),
        blocks: 0,
        window_dim: 0,
        dim_s1: 0,
        dim_s2: 0,
    };
    for c in sets_in_window(n) {
        let fiber = Fiber::new(k, &c);
        if fiber.elems.is_empty() {
            continue;
        }
        let vk = vk_block(&alg, k, &c)?;
        let s1 = subspace(field, fiber.elems.len(), &s1_block(&alg, k, &c, &fiber, &vk)?)?;
        let s2_gens = s2_block(&alg, k, &c, &fiber)?;
        let s2 = subspace(field, fiber.elems.len(), &s2_gens)?;
        report.blocks += 1;
        report.window_dim += fiber.elems.len();
        report.dim_s1 += s1.dim();
        report.dim_s2 += s2.dim();
        let mut fail = |containment: &str| report.violations.push(Violation { set: c.elements(), containment: containment.into() });
        let mut s2_ok = true;
        for g in &s2_gens {
            s2_ok &= s1.contains(g)?;
        }
        if !s2_ok {
            fail("s2_in_s1");
        }
        // equal dimensions plus S₂ ⊆ S₁ give equality
        if !s2_ok || s1.dim() != s2.dim() {
            fail("s1_in_s2");
        }
    }
    report.s2_in_s1 = report.violations.iter().all(|v| v.containment != "s2_in_s1");
    report.s1_in_s2 = report.violations.iter().all(|v| v.containment != "s1_in_s2");
    Ok(report)
}
