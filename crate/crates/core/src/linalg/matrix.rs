use std::collections::{BTreeMap, HashSet};

use super::arith::{with_arith, Arith, Row};
use super::echelon::Echelon;
use super::{Field, LinalgError, Scalar};

/// Sparse vector of fixed dimension with sorted, nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVector {
    dim: usize,
    field: Field,
    entries: Vec<(usize, Scalar)>,
}

impl SparseVector {
    pub fn zero(field: Field, dim: usize) -> Self {
        SparseVector { dim, field, entries: Vec::new() }
    }

    pub fn unit(field: Field, dim: usize, i: usize) -> Self {
        assert!(i < dim, "unit vector index {i} out of range {dim}");
        SparseVector { dim, field, entries: vec![(i, Scalar::one(field))] }
    }

    /// Builds a vector from possibly repeated `(index, value)` pairs, summing repeats.
    pub fn from_entries<I>(field: Field, dim: usize, entries: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, v) in entries {
            if i >= dim {
                return Err(LinalgError::IndexOutOfRange { index: i, bound: dim });
            }
            if v.field() != field {
                return Err(LinalgError::FieldMismatch(field, v.field()));
            }
            match acc.get_mut(&i) {
                Some(s) => *s = &*s + &v,
                None => {
                    acc.insert(i, v);
                }
            }
        }
        Ok(SparseVector {
            dim,
            field,
            entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        })
    }

    pub fn from_ints(field: Field, values: &[i64]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .map(|(i, &v)| (i, Scalar::from_int(field, v)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        SparseVector { dim: values.len(), field, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(p) => self.entries[p].1.clone(),
            Err(_) => Scalar::zero(self.field),
        }
    }

    fn compatible(&self, other: &SparseVector) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch(self.field, other.field));
        }
        if self.dim != other.dim {
            return Err(LinalgError::DimensionMismatch(format!("vectors of length {} and {}", self.dim, other.dim)));
        }
        Ok(())
    }

    pub fn add(&self, other: &SparseVector) -> Result<SparseVector, LinalgError> {
        self.compatible(other)?;
        SparseVector::from_entries(self.field, self.dim, self.entries.iter().chain(&other.entries).cloned())
    }

    pub fn sub(&self, other: &SparseVector) -> Result<SparseVector, LinalgError> {
        self.add(&other.scale(&Scalar::from_int(self.field, -1))?)
    }

    pub fn scale(&self, c: &Scalar) -> Result<SparseVector, LinalgError> {
        if c.field() != self.field {
            return Err(LinalgError::FieldMismatch(self.field, c.field()));
        }
        Ok(SparseVector {
            dim: self.dim,
            field: self.field,
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (*i, v * c))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        })
    }

    /// The first `n` coordinates.
    pub fn truncate(&self, n: usize) -> SparseVector {
        SparseVector {
            dim: n.min(self.dim),
            field: self.field,
            entries: self.entries.iter().filter(|(i, _)| *i < n).cloned().collect(),
        }
    }

    fn lift<A: Arith>(&self, ar: &A) -> Row<A::E> {
        self.entries.iter().map(|(i, v)| (*i, ar.lift(v))).collect()
    }

    fn lower<A: Arith>(ar: &A, field: Field, dim: usize, row: &Row<A::E>) -> SparseVector {
        SparseVector {
            dim,
            field,
            entries: row.iter().map(|(i, v)| (*i, ar.lower(v))).collect(),
        }
    }
}

/// Sparse matrix over a [`Field`], stored by rows, with optional unique labels.
#[derive(Clone, Debug)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    field: Field,
    rows: Vec<Vec<(usize, Scalar)>>,
    row_labels: Option<Vec<String>>,
    col_labels: Option<Vec<String>>,
}

impl PartialEq for SparseMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.nrows == other.nrows && self.ncols == other.ncols && self.field == other.field && self.rows == other.rows
    }
}

impl Eq for SparseMatrix {}

impl SparseMatrix {
    pub fn zero(field: Field, nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            field,
            rows: vec![Vec::new(); nrows],
            row_labels: None,
            col_labels: None,
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = SparseMatrix::zero(field, n, n);
        for (i, row) in m.rows.iter_mut().enumerate() {
            row.push((i, Scalar::one(field)));
        }
        m
    }

    /// Builds a matrix from `(row, col, value)` triplets; repeated positions are summed.
    pub fn from_triplets<I>(field: Field, nrows: usize, ncols: usize, triplets: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); nrows];
        for (r, c, v) in triplets {
            if r >= nrows {
                return Err(LinalgError::IndexOutOfRange { index: r, bound: nrows });
            }
            if c >= ncols {
                return Err(LinalgError::IndexOutOfRange { index: c, bound: ncols });
            }
            if v.field() != field {
                return Err(LinalgError::FieldMismatch(field, v.field()));
            }
            match acc[r].get_mut(&c) {
                Some(s) => *s = &*s + &v,
                None => {
                    acc[r].insert(c, v);
                }
            }
        }
        let rows = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Ok(SparseMatrix { nrows, ncols, field, rows, row_labels: None, col_labels: None })
    }

    /// Dense integer rows, mapped into `field`.
    pub fn from_int_rows(field: Field, rows: &[Vec<i64>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let triplets = rows.iter().enumerate().flat_map(|(r, row)| {
            assert_eq!(row.len(), ncols, "ragged integer rows");
            row.iter().enumerate().map(move |(c, &v)| (r, c, Scalar::from_int(field, v)))
        });
        SparseMatrix::from_triplets(field, rows.len(), ncols, triplets).expect("in-range dense rows")
    }

    pub fn from_columns(field: Field, nrows: usize, columns: &[SparseVector]) -> Result<Self, LinalgError> {
        let mut triplets = Vec::new();
        for (c, col) in columns.iter().enumerate() {
            if col.dim != nrows {
                return Err(LinalgError::DimensionMismatch(format!("column of length {} in a matrix with {nrows} rows", col.dim)));
            }
            if col.field != field {
                return Err(LinalgError::FieldMismatch(field, col.field));
            }
            triplets.extend(col.entries.iter().map(|(r, v)| (*r, c, v.clone())));
        }
        SparseMatrix::from_triplets(field, nrows, columns.len(), triplets)
    }

    pub fn from_rows(field: Field, ncols: usize, rows: &[SparseVector]) -> Result<Self, LinalgError> {
        Ok(SparseMatrix::from_columns(field, ncols, rows)?.transpose())
    }

    /// Attaches row and column labels, which must be unique and match the shape.
    pub fn with_labels(mut self, row_labels: Vec<String>, col_labels: Vec<String>) -> Result<Self, LinalgError> {
        if row_labels.len() != self.nrows || col_labels.len() != self.ncols {
            return Err(LinalgError::DimensionMismatch("label count does not match shape".into()));
        }
        for labels in [&row_labels, &col_labels] {
            let mut seen = HashSet::new();
            for l in labels.iter() {
                if !seen.insert(l) {
                    return Err(LinalgError::DuplicateLabel(l.clone()));
                }
            }
        }
        self.row_labels = Some(row_labels);
        self.col_labels = Some(col_labels);
        Ok(self)
    }

    pub fn row_labels(&self) -> Option<&[String]> {
        self.row_labels.as_deref()
    }

    pub fn col_labels(&self) -> Option<&[String]> {
        self.col_labels.as_deref()
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match self.rows[r].binary_search_by_key(&c, |(j, _)| *j) {
            Ok(p) => self.rows[r][p].1.clone(),
            Err(_) => Scalar::zero(self.field),
        }
    }

    pub fn row(&self, r: usize) -> SparseVector {
        SparseVector { dim: self.ncols, field: self.field, entries: self.rows[r].clone() }
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.rows.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut rows = vec![Vec::new(); self.ncols];
        for (r, c, v) in self.entries() {
            rows[c].push((r, v.clone()));
        }
        SparseMatrix {
            nrows: self.ncols,
            ncols: self.nrows,
            field: self.field,
            rows,
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
        }
    }

    pub fn columns(&self) -> Vec<SparseVector> {
        let t = self.transpose();
        (0..t.nrows).map(|r| t.row(r)).collect()
    }

    pub fn column(&self, c: usize) -> SparseVector {
        let entries = self
            .rows
            .iter()
            .enumerate()
            .filter_map(|(r, row)| {
                row.binary_search_by_key(&c, |(j, _)| *j).ok().map(|p| (r, row[p].1.clone()))
            })
            .collect();
        SparseVector { dim: self.nrows, field: self.field, entries }
    }

    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch(self.field, other.field));
        }
        if self.ncols != other.nrows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        let mut rows = Vec::with_capacity(self.nrows);
        for row in &self.rows {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (k, a) in row {
                for (c, b) in &other.rows[*k] {
                    let t = a * b;
                    match acc.get_mut(c) {
                        Some(s) => *s = &*s + &t,
                        None => {
                            acc.insert(*c, t);
                        }
                    }
                }
            }
            rows.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        Ok(SparseMatrix { nrows: self.nrows, ncols: other.ncols, field: self.field, rows, row_labels: None, col_labels: None })
    }

    pub fn apply(&self, v: &SparseVector) -> Result<SparseVector, LinalgError> {
        if v.dim != self.ncols {
            return Err(LinalgError::DimensionMismatch(format!("{} columns applied to length {}", self.ncols, v.dim)));
        }
        if v.field != self.field {
            return Err(LinalgError::FieldMismatch(self.field, v.field));
        }
        let mut entries = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            let mut s = Scalar::zero(self.field);
            let (mut i, mut j) = (0, 0);
            while i < row.len() && j < v.entries.len() {
                match row[i].0.cmp(&v.entries[j].0) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        s = &s + &(&row[i].1 * &v.entries[j].1);
                        i += 1;
                        j += 1;
                    }
                }
            }
            if !s.is_zero() {
                entries.push((r, s));
            }
        }
        Ok(SparseVector { dim: self.nrows, field: self.field, entries })
    }

    pub fn add(&self, other: &SparseMatrix) -> Result<SparseMatrix, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch(self.field, other.field));
        }
        if (self.nrows, self.ncols) != (other.nrows, other.ncols) {
            return Err(LinalgError::DimensionMismatch("adding matrices of different shapes".into()));
        }
        SparseMatrix::from_triplets(
            self.field,
            self.nrows,
            self.ncols,
            self.entries().chain(other.entries()).map(|(r, c, v)| (r, c, v.clone())),
        )
    }

    pub fn sub(&self, other: &SparseMatrix) -> Result<SparseMatrix, LinalgError> {
        self.add(&other.scale(&Scalar::from_int(self.field, -1))?)
    }

    pub fn scale(&self, c: &Scalar) -> Result<SparseMatrix, LinalgError> {
        if c.field() != self.field {
            return Err(LinalgError::FieldMismatch(self.field, c.field()));
        }
        SparseMatrix::from_triplets(self.field, self.nrows, self.ncols, self.entries().map(|(r, col, v)| (r, col, v * c)))
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn kernel_basis(&self) -> Vec<SparseVector> {
        kernel_basis(self)
    }

    /// Inverse of a square matrix, by Gauss-Jordan elimination of `[M | I]`.
    pub fn inverse(&self) -> Result<SparseMatrix, LinalgError> {
        if self.nrows != self.ncols {
            return Err(LinalgError::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.nrows;
        with_arith!(self.field, ar => {
            let mut ech = Echelon::new(ar, false);
            for (r, row) in self.rows.iter().enumerate() {
                let mut lifted: Row<_> = row.iter().map(|(c, v)| (*c, ar.lift(v))).collect();
                lifted.push((n + r, ar.one()));
                ech.insert(lifted, r);
            }
            let rref = ech.into_rref();
            if rref.len() < n || rref.iter().any(|(c, _)| *c >= n) {
                return Err(LinalgError::Singular);
            }
            let triplets = rref.iter().enumerate().flat_map(|(r, (_, row))| {
                row.iter().filter(|(c, _)| *c >= n).map(move |(c, v)| (r, c - n, ar.lower(v)))
            });
            SparseMatrix::from_triplets(self.field, n, n, triplets)
        })
    }

    /// Places `self` into a larger zero matrix at the given offset.
    pub fn embed(&self, nrows: usize, ncols: usize, row0: usize, col0: usize) -> Result<SparseMatrix, LinalgError> {
        SparseMatrix::from_triplets(self.field, nrows, ncols, self.entries().map(|(r, c, v)| (r + row0, c + col0, v.clone())))
    }
}

/// Rank by incremental sparse elimination, feeding the sparsest rows first.
pub fn rank(m: &SparseMatrix) -> usize {
    let mut order: Vec<usize> = (0..m.nrows).collect();
    order.sort_by_key(|&r| m.rows[r].len());
    with_arith!(m.field, ar => {
        let mut ech = Echelon::new(ar, false);
        for r in order {
            if ech.rank() == m.ncols {
                break;
            }
            ech.insert(m.rows[r].iter().map(|(c, v)| (*c, ar.lift(v))).collect(), r);
        }
        ech.rank()
    })
}

/// Basis of `{x : Mx = 0}`, one vector per free column of the reduced echelon form.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVector> {
    with_arith!(m.field, ar => {
        let mut ech = Echelon::new(ar, false);
        for (r, row) in m.rows.iter().enumerate() {
            ech.insert(row.iter().map(|(c, v)| (*c, ar.lift(v))).collect(), r);
        }
        let rref = ech.into_rref();
        let pivots: HashSet<usize> = rref.iter().map(|(c, _)| *c).collect();
        let mut by_free: BTreeMap<usize, Vec<(usize, Scalar)>> =
            (0..m.ncols).filter(|c| !pivots.contains(c)).map(|c| (c, vec![(c, Scalar::one(m.field))])).collect();
        for (pc, row) in &rref {
            for (c, v) in row.iter().skip(1) {
                if let Some(vec) = by_free.get_mut(c) {
                    vec.push((*pc, ar.lower(&ar.neg(v))));
                }
            }
        }
        by_free
            .into_values()
            .map(|mut e| {
                e.sort_by_key(|(i, _)| *i);
                SparseVector { dim: m.ncols, field: m.field, entries: e }
            })
            .collect()
    })
}

fn common_shape(vs: &[&SparseVector]) -> Result<Option<(Field, usize)>, LinalgError> {
    let mut shape = None;
    for v in vs {
        match shape {
            None => shape = Some((v.field, v.dim)),
            Some((f, d)) => {
                if f != v.field {
                    return Err(LinalgError::FieldMismatch(f, v.field));
                }
                if d != v.dim {
                    return Err(LinalgError::DimensionMismatch(format!("vectors of length {d} and {}", v.dim)));
                }
            }
        }
    }
    Ok(shape)
}

/// Coefficients `c` with `v = sum_i c_i basis_i`, or `None` if `v` is outside the span.
pub fn in_span(v: &SparseVector, basis: &[SparseVector]) -> Result<Option<Vec<Scalar>>, LinalgError> {
    let all: Vec<&SparseVector> = std::iter::once(v).chain(basis).collect();
    common_shape(&all)?;
    let field = v.field;
    with_arith!(field, ar => {
        let mut ech = Echelon::new(ar, true);
        for (i, b) in basis.iter().enumerate() {
            ech.insert(b.lift(&ar), i);
        }
        Ok(ech.solve(v.lift(&ar)).map(|combo| {
            let mut coeffs = vec![Scalar::zero(field); basis.len()];
            for (i, c) in combo {
                coeffs[i] = ar.lower(&c);
            }
            coeffs
        }))
    })
}

/// Dimension of the span of `vectors`.
pub fn span_rank(vectors: &[SparseVector]) -> Result<usize, LinalgError> {
    let refs: Vec<&SparseVector> = vectors.iter().collect();
    let Some((field, dim)) = common_shape(&refs)? else { return Ok(0) };
    let mut s = Subspace::new(field, dim);
    for v in vectors {
        s.insert(v)?;
    }
    Ok(s.dim())
}

/// Whether two spanning sets define the same subspace.
pub fn subspace_equal(a: &[SparseVector], b: &[SparseVector]) -> Result<bool, LinalgError> {
    let all: Vec<&SparseVector> = a.iter().chain(b).collect();
    let Some((field, dim)) = common_shape(&all)? else { return Ok(true) };
    let mut sa = Subspace::new(field, dim);
    for v in a {
        sa.insert(v)?;
    }
    let mut sb = Subspace::new(field, dim);
    for v in b {
        sb.insert(v)?;
    }
    if sa.dim() != sb.dim() {
        return Ok(false);
    }
    for v in b {
        if !sa.contains(v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
enum SubspaceInner {
    Rat(Echelon<super::arith::Rat>),
    ModP(Echelon<super::arith::ModP>),
}

/// A subspace of `field^dim` kept in echelon form for repeated membership tests.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: Field,
    dim: usize,
    inner: SubspaceInner,
    count: usize,
}

impl Subspace {
    pub fn new(field: Field, dim: usize) -> Self {
        let inner = match field {
            Field::Rational => SubspaceInner::Rat(Echelon::new(super::arith::Rat, false)),
            Field::Prime(p) => SubspaceInner::ModP(Echelon::new(super::arith::ModP(p), false)),
        };
        Subspace { field, dim, inner, count: 0 }
    }

    fn check(&self, v: &SparseVector) -> Result<(), LinalgError> {
        if v.field != self.field {
            return Err(LinalgError::FieldMismatch(self.field, v.field));
        }
        if v.dim != self.dim {
            return Err(LinalgError::DimensionMismatch(format!("vector of length {} in ambient {}", v.dim, self.dim)));
        }
        Ok(())
    }

    /// Adds a vector; returns whether the dimension grew.
    pub fn insert(&mut self, v: &SparseVector) -> Result<bool, LinalgError> {
        self.check(v)?;
        self.count += 1;
        Ok(match &mut self.inner {
            SubspaceInner::Rat(e) => e.insert(v.lift(&super::arith::Rat), self.count),
            SubspaceInner::ModP(e) => {
                let ar = super::arith::ModP(self.field.characteristic());
                e.insert(v.lift(&ar), self.count)
            }
        })
    }

    pub fn contains(&self, v: &SparseVector) -> Result<bool, LinalgError> {
        self.check(v)?;
        Ok(match &self.inner {
            SubspaceInner::Rat(e) => e.contains(v.lift(&super::arith::Rat)),
            SubspaceInner::ModP(e) => e.contains(v.lift(&super::arith::ModP(self.field.characteristic()))),
        })
    }

    /// The part of `v` left after leading-term reduction; zero iff `v` is in the subspace.
    pub fn residue(&self, v: &SparseVector) -> Result<SparseVector, LinalgError> {
        self.check(v)?;
        Ok(match &self.inner {
            SubspaceInner::Rat(e) => {
                let ar = super::arith::Rat;
                SparseVector::lower(&ar, self.field, self.dim, &e.reduce(v.lift(&ar)).0)
            }
            SubspaceInner::ModP(e) => {
                let ar = super::arith::ModP(self.field.characteristic());
                SparseVector::lower(&ar, self.field, self.dim, &e.reduce(v.lift(&ar)).0)
            }
        })
    }

    pub fn dim(&self) -> usize {
        match &self.inner {
            SubspaceInner::Rat(e) => e.rank(),
            SubspaceInner::ModP(e) => e.rank(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_small_matrices() {
        let q = Field::Rational;
        let m = SparseMatrix::from_int_rows(q, &[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rank(), 1);
        let f2 = Field::Prime(2);
        let m = SparseMatrix::from_int_rows(f2, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let mq = SparseMatrix::from_int_rows(q, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(mq.rank(), 3);
        assert_eq!(SparseMatrix::zero(q, 0, 0).rank(), 0);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let q = Field::Rational;
        let m = SparseMatrix::from_int_rows(q, &[vec![1, 2, 3, 4], vec![2, 4, 7, 9]]);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.apply(v).unwrap().is_zero());
        }
        assert_eq!(SparseMatrix::identity(q, 3).kernel_basis().len(), 0);
    }

    #[test]
    fn span_witness() {
        let q = Field::Rational;
        let b = vec![SparseVector::from_ints(q, &[1, 0, 1]), SparseVector::from_ints(q, &[0, 1, 1])];
        let w = in_span(&SparseVector::from_ints(q, &[2, 3, 5]), &b).unwrap().unwrap();
        assert_eq!(w, vec![Scalar::from_int(q, 2), Scalar::from_int(q, 3)]);
        assert!(in_span(&SparseVector::from_ints(q, &[0, 0, 1]), &b).unwrap().is_none());
    }

    #[test]
    fn subspace_equality_edge_cases() {
        let q = Field::Rational;
        assert!(subspace_equal(&[], &[SparseVector::zero(q, 3)]).unwrap());
        let a = vec![SparseVector::from_ints(q, &[1, 1]), SparseVector::from_ints(q, &[1, -1])];
        let b = vec![SparseVector::from_ints(q, &[1, 0]), SparseVector::from_ints(q, &[0, 1])];
        assert!(subspace_equal(&a, &b).unwrap());
        let f2 = Field::Prime(2);
        let a2 = vec![SparseVector::from_ints(f2, &[1, 1]), SparseVector::from_ints(f2, &[1, -1])];
        let b2 = vec![SparseVector::from_ints(f2, &[1, 0]), SparseVector::from_ints(f2, &[0, 1])];
        assert!(!subspace_equal(&a2, &b2).unwrap());
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = SparseVector::from_ints(Field::Rational, &[1]);
        let b = SparseVector::from_ints(Field::Prime(3), &[1]);
        assert!(matches!(in_span(&a, &[b]), Err(LinalgError::FieldMismatch(..))));
    }

    #[test]
    fn inverse_round_trip() {
        let q = Field::Rational;
        let m = SparseMatrix::from_int_rows(q, &[vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), SparseMatrix::identity(q, 2));
        let s = SparseMatrix::from_int_rows(q, &[vec![1, 1], vec![1, 1]]);
        assert!(matches!(s.inverse(), Err(LinalgError::Singular)));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let m = SparseMatrix::identity(Field::Rational, 2);
        let r = m.with_labels(vec!["a".into(), "a".into()], vec!["x".into(), "y".into()]);
        assert!(matches!(r, Err(LinalgError::DuplicateLabel(_))));
    }
}
