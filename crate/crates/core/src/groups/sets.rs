use std::fmt::Debug;
use std::hash::Hash;

/// Finite subset of a group.
pub trait ElemSet<E>: Clone + Eq + Ord + Hash + Debug + Send + Sync {
    fn empty() -> Self;
    fn from_elements<I: IntoIterator<Item = E>>(it: I) -> Self;
    fn contains(&self, e: E) -> bool;
    fn insert(&mut self, e: E);
    fn remove(&mut self, e: E);
    fn union(&self, other: &Self) -> Self;
    fn is_subset(&self, other: &Self) -> bool;
    fn len(&self) -> usize;
    /// Elements in increasing order.
    fn elements(&self) -> Vec<E>;

    fn singleton(e: E) -> Self {
        Self::from_elements([e])
    }

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn with(&self, e: E) -> Self {
        let mut s = self.clone();
        s.insert(e);
        s
    }
}

/// Subset of a finite group of order at most 64, one bit per element index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, serde::Serialize)]
pub struct BitSet(pub u64);

impl ElemSet<usize> for BitSet {
    fn empty() -> Self {
        BitSet(0)
    }
    fn from_elements<I: IntoIterator<Item = usize>>(it: I) -> Self {
        BitSet(it.into_iter().fold(0, |m, e| m | (1u64 << e)))
    }
    fn contains(&self, e: usize) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }
    fn insert(&mut self, e: usize) {
        self.0 |= 1 << e;
    }
    fn remove(&mut self, e: usize) {
        self.0 &= !(1 << e);
    }
    fn union(&self, other: &Self) -> Self {
        BitSet(self.0 | other.0)
    }
    fn is_subset(&self, other: &Self) -> bool {
        self.0 & !other.0 == 0
    }
    fn len(&self) -> usize {
        self.0.count_ones() as usize
    }
    fn elements(&self) -> Vec<usize> {
        let mut m = self.0;
        let mut out = Vec::with_capacity(m.count_ones() as usize);
        while m != 0 {
            out.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        out
    }
}

impl BitSet {
    /// Lexicographic comparison of the sorted element lists.
    pub fn lex_cmp(&self, other: &BitSet) -> std::cmp::Ordering {
        self.elements().cmp(&other.elements())
    }
}

/// Finite subset of `Z`, kept sorted and duplicate free.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntSet(Vec<i64>);

impl IntSet {
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn min(&self) -> Option<i64> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.0.last().copied()
    }

    pub fn shift(&self, by: i64) -> IntSet {
        IntSet(self.0.iter().map(|x| x.checked_add(by).expect("integer overflow in Z")).collect())
    }
}

impl ElemSet<i64> for IntSet {
    fn empty() -> Self {
        IntSet(Vec::new())
    }
    fn from_elements<I: IntoIterator<Item = i64>>(it: I) -> Self {
        let mut v: Vec<i64> = it.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        IntSet(v)
    }
    fn contains(&self, e: i64) -> bool {
        self.0.binary_search(&e).is_ok()
    }
    fn insert(&mut self, e: i64) {
        if let Err(p) = self.0.binary_search(&e) {
            self.0.insert(p, e);
        }
    }
    fn remove(&mut self, e: i64) {
        if let Ok(p) = self.0.binary_search(&e) {
            self.0.remove(p);
        }
    }
    fn union(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        IntSet(out)
    }
    fn is_subset(&self, other: &Self) -> bool {
        self.0.iter().all(|x| other.contains(*x))
    }
    fn len(&self) -> usize {
        self.0.len()
    }
    fn elements(&self) -> Vec<i64> {
        self.0.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitset_basics() {
        let a = BitSet::from_elements([0, 3]);
        let b = BitSet::from_elements([0, 1, 3]);
        assert!(a.is_subset(&b));
        assert_eq!(a.union(&BitSet::singleton(1)), b);
        assert_eq!(b.elements(), vec![0, 1, 3]);
        assert_eq!(BitSet::from_elements([0, 1, 3]).lex_cmp(&BitSet::from_elements([0, 2])), std::cmp::Ordering::Less);
    }

    #[test]
    fn intset_basics() {
        let a = IntSet::from_elements([3, -1, 0, 3]);
        assert_eq!(a.as_slice(), &[-1, 0, 3]);
        let b = a.union(&IntSet::from_elements([1, 3]));
        assert_eq!(b.as_slice(), &[-1, 0, 1, 3]);
        assert_eq!(a.shift(2).as_slice(), &[1, 2, 5]);
        assert!(a.is_subset(&b));
    }
}
