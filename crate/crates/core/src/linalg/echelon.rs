//! Incremental sparse row echelon form.
//!
//! Rows are reduced against existing pivots by their leading entry only,
//! which is enough to decide membership; [`Echelon::into_rref`] performs the
//! back substitution needed for kernels and inverses.

use std::collections::HashMap;

use super::arith::{row_scale, row_sub_mul, Arith, Row};

#[derive(Clone, Debug)]
pub(crate) struct Echelon<A: Arith> {
    ar: A,
    pivot_of: HashMap<usize, usize>,
    rows: Vec<Row<A::E>>,
    combos: Option<Vec<Row<A::E>>>,
}

impl<A: Arith> Echelon<A> {
    pub fn new(ar: A, track: bool) -> Self {
        Echelon {
            ar,
            pivot_of: HashMap::new(),
            rows: Vec::new(),
            combos: track.then(Vec::new),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Leading-term reduction. The returned combination `c` satisfies
    /// `reduced = row + sum_i c_i * input_i` when tracking is enabled.
    pub fn reduce(&self, mut row: Row<A::E>) -> (Row<A::E>, Row<A::E>) {
        let mut combo = Vec::new();
        while let Some((col, lead)) = row.first().cloned() {
            let Some(&p) = self.pivot_of.get(&col) else { break };
            row = row_sub_mul(&self.ar, &row, &lead, &self.rows[p]);
            if let Some(combos) = &self.combos {
                combo = row_sub_mul(&self.ar, &combo, &lead, &combos[p]);
            }
        }
        (row, combo)
    }

    pub fn contains(&self, row: Row<A::E>) -> bool {
        self.reduce(row).0.is_empty()
    }

    /// Inserts a row tagged with its input index; returns whether it raised the rank.
    pub fn insert(&mut self, row: Row<A::E>, tag: usize) -> bool {
        let (mut row, mut combo) = self.reduce(row);
        if row.is_empty() {
            return false;
        }
        let inv = self.ar.inv(&row[0].1);
        row_scale(&self.ar, &mut row, &inv);
        self.pivot_of.insert(row[0].0, self.rows.len());
        self.rows.push(row);
        if let Some(combos) = &mut self.combos {
            combo = row_sub_mul(&self.ar, &combo, &self.ar.neg(&self.ar.one()), &vec![(tag, self.ar.one())]);
            row_scale(&self.ar, &mut combo, &inv);
            combos.push(combo);
        }
        true
    }

    /// Expresses `row` in terms of the inserted inputs, if it lies in their span.
    pub fn solve(&self, row: Row<A::E>) -> Option<Row<A::E>> {
        let (rest, combo) = self.reduce(row);
        if !rest.is_empty() {
            return None;
        }
        let mut out: Row<A::E> = combo.into_iter().map(|(i, v)| (i, self.ar.neg(&v))).collect();
        out.sort_by_key(|(i, _)| *i);
        Some(out)
    }

    /// Reduced row echelon form as `(pivot column, row)` sorted by pivot column.
    pub fn into_rref(self) -> Vec<(usize, Row<A::E>)> {
        let ar = self.ar;
        let mut rows: Vec<(usize, Row<A::E>)> = self.rows.into_iter().map(|r| (r[0].0, r)).collect();
        rows.sort_by_key(|(c, _)| *c);
        for k in (0..rows.len()).rev() {
            let (col, pivot) = (rows[k].0, rows[k].1.clone());
            for row in rows[..k].iter_mut() {
                if let Ok(pos) = row.1.binary_search_by_key(&col, |(c, _)| *c) {
                    let c = row.1[pos].1.clone();
                    row.1 = row_sub_mul(&ar, &row.1, &c, &pivot);
                }
            }
        }
        rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::arith::ModP;

    #[test]
    fn tracking_recovers_combination() {
        let ar = ModP(5);
        let mut e = Echelon::new(ar, true);
        assert!(e.insert(vec![(0, 1), (1, 2)], 0));
        assert!(e.insert(vec![(1, 1), (2, 1)], 1));
        assert!(!e.insert(vec![(0, 1), (1, 3), (2, 1)], 2));
        // 2*r0 + 3*r1 = (2, 4+3, 3) = (2, 2, 3)
        let w = e.solve(vec![(0, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(w, vec![(0, 2), (1, 3)]);
        assert!(e.solve(vec![(2, 1)]).is_none());
    }

    #[test]
    fn rref_clears_above_pivots() {
        let ar = ModP(7);
        let mut e = Echelon::new(ar, false);
        e.insert(vec![(0, 1), (1, 1)], 0);
        e.insert(vec![(1, 1), (2, 1)], 1);
        let r = e.into_rref();
        assert_eq!(r[0].1, vec![(0, 1), (2, 6)]);
        assert_eq!(r[1].1, vec![(1, 1), (2, 1)]);
    }
}
