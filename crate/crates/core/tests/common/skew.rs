//! Reference models of the partial group algebra that never touch the
//! library's semigroup product.
//!
//! * `SkewWord`: the skew-ring picture, where an element is an idempotent
//!   label set `S` together with a group element, and words in the
//!   generators are multiplied one letter at a time.
//! * `arrow_operator`: the action of a word on the arrows `(A, h)` of the
//!   groupoid by left composition, which is a faithful representation.

use std::collections::{BTreeMap, BTreeSet};

/// `(S # x)` with `S` a set of labels of idempotents `e_s`, stored with the
/// group operation supplied as closures so that the model is group agnostic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SkewWord<E: Ord + Copy> {
    pub labels: BTreeSet<E>,
    pub elem: E,
}

pub struct SkewModel<E, M, I>
where
    M: Fn(E, E) -> E,
    I: Fn(E) -> E,
{
    pub identity: E,
    pub mul: M,
    pub inv: I,
}

impl<E: Ord + Copy, M: Fn(E, E) -> E, I: Fn(E) -> E> SkewModel<E, M, I> {
    /// The generator `[g] = e_g # g`.
    pub fn generator(&self, g: E) -> SkewWord<E> {
        let mut labels = BTreeSet::new();
        if g != self.identity {
            labels.insert(g);
        }
        SkewWord { labels, elem: g }
    }

    /// `(S # x)(T # h) = (S ∪ x(T ∪ {x⁻¹}) # xh)`, with the identity label dropped.
    pub fn mul(&self, a: &SkewWord<E>, b: &SkewWord<E>) -> SkewWord<E> {
        let x = a.elem;
        let mut labels = a.labels.clone();
        let shifted = b.labels.iter().copied().chain(std::iter::once((self.inv)(x)));
        for t in shifted {
            let y = (self.mul)(x, t);
            if y != self.identity {
                labels.insert(y);
            }
        }
        SkewWord { labels, elem: (self.mul)(x, b.elem) }
    }

    /// Evaluates a word of generators letter by letter.
    pub fn word(&self, letters: &[E]) -> SkewWord<E> {
        let mut acc = SkewWord { labels: BTreeSet::new(), elem: self.identity };
        for &g in letters {
            acc = self.mul(&acc, &self.generator(g));
        }
        acc
    }

    /// Word for the basis element `(A, g)`: `[a][a⁻¹]` for each `a ∈ A ∖ {1}`, then `[g]`.
    pub fn basis_word(&self, set: &[E], g: E) -> Vec<E> {
        let mut w = Vec::new();
        for &a in set {
            if a != self.identity {
                w.push(a);
                w.push((self.inv)(a));
            }
        }
        w.push(g);
        w
    }
}

/// Action of the word on arrows `(A, h)` of the finite groupoid: the
/// generator `[g]` sends `(A, h)` to `(A, gh)` when `g⁻¹ ∈ hA`, else to 0.
/// Arrows are encoded as `(mask of A, h)` for a group of order `n` with
/// multiplication table `table`. The result maps each arrow to its image.
pub fn arrow_operator(table: &[Vec<usize>], word: &[usize]) -> BTreeMap<(u64, usize), Option<(u64, usize)>> {
    let n = table.len();
    let inv: Vec<usize> = (0..n).map(|a| (0..n).find(|&b| table[a][b] == 0).unwrap()).collect();
    let translate = |g: usize, m: u64| -> u64 {
        (0..n).filter(|&x| m >> x & 1 == 1).fold(0, |acc, x| acc | 1 << table[g][x])
    };
    let mut out = BTreeMap::new();
    for rest in 0..1u64 << (n - 1) {
        let a = 1 | rest << 1;
        for h in 0..n {
            if a >> inv[h] & 1 == 0 {
                continue;
            }
            let mut cur = Some((a, h));
            for &g in word.iter().rev() {
                cur = cur.and_then(|(src, h)| {
                    let target = translate(h, src);
                    (target >> inv[g] & 1 == 1).then(|| (src, table[g][h]))
                });
            }
            out.insert((a, h), cur);
        }
    }
    out
}
