//! Unboxed arithmetic used inside elimination loops.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::{inv_mod, Scalar};

pub(crate) trait Arith: Clone {
    type E: Clone + std::fmt::Debug;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    /// `a - c * b`
    fn sub_mul(&self, a: &Self::E, c: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn lift(&self, s: &Scalar) -> Self::E;
    fn lower(&self, a: &Self::E) -> Scalar;
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct ModP(pub u32);

impl Arith for ModP {
    type E = u32;
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn sub_mul(&self, a: &u32, c: &u32, b: &u32) -> u32 {
        let p = self.0 as u64;
        let cb = (*c as u64 * *b as u64) % p;
        ((*a as u64 + p - cb) % p) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.0 as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        (self.0 - *a) % self.0
    }
    fn inv(&self, a: &u32) -> u32 {
        inv_mod(*a, self.0)
    }
    fn lift(&self, s: &Scalar) -> u32 {
        match s {
            Scalar::Residue { value, .. } => *value,
            Scalar::Rational(_) => panic!("rational scalar in prime-field elimination"),
        }
    }
    fn lower(&self, a: &u32) -> Scalar {
        Scalar::Residue { value: *a, modulus: self.0 }
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Rat;

impl Arith for Rat {
    type E = BigRational;
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn sub_mul(&self, a: &BigRational, c: &BigRational, b: &BigRational) -> BigRational {
        a - c * b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn lift(&self, s: &Scalar) -> BigRational {
        s.rational().expect("residue in rational elimination").clone()
    }
    fn lower(&self, a: &BigRational) -> Scalar {
        Scalar::Rational(a.clone())
    }
}

pub(crate) type Row<E> = Vec<(usize, E)>;

/// `a - c * b` on sorted sparse rows.
pub(crate) fn row_sub_mul<A: Arith>(ar: &A, a: &Row<A::E>, c: &A::E, b: &Row<A::E>) -> Row<A::E> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = ar.neg(&ar.mul(c, &b[j].1));
            if !ar.is_zero(&v) {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = ar.sub_mul(&a[i].1, c, &b[j].1);
            if !ar.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub(crate) fn row_scale<A: Arith>(ar: &A, row: &mut Row<A::E>, c: &A::E) {
    for (_, v) in row.iter_mut() {
        *v = ar.mul(v, c);
    }
}

/// Dispatches a closure on the arithmetic matching `field`.
macro_rules! with_arith {
    ($field:expr, $ar:ident => $body:expr) => {
        match $field {
            $crate::linalg::Field::Rational => {
                let $ar = $crate::linalg::arith::Rat;
                $body
            }
            $crate::linalg::Field::Prime(p) => {
                let $ar = $crate::linalg::arith::ModP(p);
                $body
            }
        }
    };
}
pub(crate) use with_arith;

