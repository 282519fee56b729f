use std::collections::BTreeMap;

use crate::groups::{ElemSet, Group};
use crate::linalg::{Field, Scalar};

use super::AlgebraError;

/// Canonical basis element `(A, g)` of the partial group algebra, with
/// `1 ∈ A` and `g ∈ A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SElement<E, S> {
    pub(crate) set: S,
    pub(crate) elem: E,
}

/// [`SElement`] for a particular group.
pub type SElem<G> = SElement<<G as Group>::Elem, <G as Group>::Set>;

impl<E: Copy, S> SElement<E, S> {
    pub fn set(&self) -> &S {
        &self.set
    }

    pub fn elem(&self) -> E {
        self.elem
    }
}

/// Checked constructor for `(A, g)`.
pub fn s_element<G: Group>(group: &G, set: G::Set, elem: G::Elem) -> Result<SElem<G>, AlgebraError> {
    if !set.contains(group.identity()) || !set.contains(elem) {
        return Err(AlgebraError::InvalidElement(format!(
            "({:?}, {}) must contain the identity and its group element",
            set.elements(),
            group.elem_name(elem)
        )));
    }
    Ok(SElement { set, elem })
}

/// `(A, g)(B, h) = (A ∪ gB, gh)`.
pub fn s_mul<G: Group>(group: &G, x: &SElem<G>, y: &SElem<G>) -> SElem<G> {
    SElement {
        set: x.set.union(&group.translate(x.elem, &y.set)),
        elem: group.mul(x.elem, y.elem),
    }
}

/// `(A, g)* = (g⁻¹A, g⁻¹)`.
pub fn s_inv<G: Group>(group: &G, x: &SElem<G>) -> SElem<G> {
    let gi = group.inv(x.elem);
    SElement { set: group.translate(gi, &x.set), elem: gi }
}

/// Finite linear combination of canonical basis elements; zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement<E: Ord, S: Ord> {
    pub(crate) field: Field,
    pub(crate) terms: BTreeMap<SElement<E, S>, Scalar>,
}

/// [`AlgebraElement`] for a particular group.
pub type AlgElem<G> = AlgebraElement<<G as Group>::Elem, <G as Group>::Set>;

impl<E: Ord + Clone, S: Ord + Clone> AlgebraElement<E, S> {
    pub fn zero(field: Field) -> Self {
        AlgebraElement { field, terms: BTreeMap::new() }
    }

    pub fn term(field: Field, s: SElement<E, S>, c: Scalar) -> Self {
        let mut x = AlgebraElement::zero(field);
        x.add_term(s, c);
        x
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SElement<E, S>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, s: &SElement<E, S>) -> Scalar {
        self.terms.get(s).cloned().unwrap_or_else(|| Scalar::zero(self.field))
    }

    /// Adds `c * s` in place.
    pub fn add_term(&mut self, s: SElement<E, S>, c: Scalar) {
        assert_eq!(c.field(), self.field, "scalar field mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&s) {
            Some(v) => {
                let sum = &*v + &c;
                if sum.is_zero() {
                    self.terms.remove(&s);
                } else {
                    *v = sum;
                }
            }
            None => {
                self.terms.insert(s, c);
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch(self.field, other.field));
        }
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("algebra field mismatch")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(self.field, -1))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        assert_eq!(c.field(), self.field, "scalar field mismatch");
        if c.is_zero() {
            return AlgebraElement::zero(self.field);
        }
        AlgebraElement {
            field: self.field,
            terms: self.terms.iter().map(|(s, v)| (s.clone(), v * c)).collect(),
        }
    }
}
