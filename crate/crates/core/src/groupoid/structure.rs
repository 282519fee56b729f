use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::groups::{BitSet, ElemSet, FiniteGroup, Group, Subgroup};
use crate::linalg::{Field, Scalar};

use super::GroupoidError;

/// Largest group order accepted by default when building the groupoid.
pub const DEFAULT_MAX_ORDER: usize = 8;

/// Arrow `(A, g)` of the groupoid, from `A` to `gA`; requires `g⁻¹ ∈ A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Arrow {
    pub source: BitSet,
    pub elem: usize,
}

/// A connected component `Δ`, with vertices listed as `g_1 A, …, g_n A`
/// where `A` is the lexicographically least vertex and `g_i` is the least
/// element index sending `A` to the `i`-th vertex (so `g_1 = 1`).
#[derive(Clone, Debug)]
pub struct Component {
    index: usize,
    vertices: Vec<BitSet>,
    transversal: Vec<usize>,
    position: HashMap<BitSet, usize>,
    stabilizer: Subgroup,
    union: BitSet,
}

impl Component {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn base(&self) -> BitSet {
        self.vertices[0]
    }

    pub fn vertices(&self) -> &[BitSet] {
        &self.vertices
    }

    pub fn transversal(&self) -> &[usize] {
        &self.transversal
    }

    /// Isotropy group `H = {h : hA = A}` of the base vertex.
    pub fn stabilizer(&self) -> &Subgroup {
        &self.stabilizer
    }

    /// Union of all vertices of the component.
    pub fn union(&self) -> BitSet {
        self.union
    }

    pub fn position(&self, v: BitSet) -> Option<usize> {
        self.position.get(&v).copied()
    }

    /// Arrows whose source lies in the component, ordered by source position then element.
    pub fn arrows(&self, group: &FiniteGroup) -> Vec<Arrow> {
        self.vertices
            .iter()
            .flat_map(|&v| {
                group.elements().filter(move |&g| v.contains(group.inv(g))).map(move |g| Arrow { source: v, elem: g })
            })
            .collect()
    }
}

/// The groupoid of pairs `(A, g)` with `1 ∈ A ⊆ G` and `g⁻¹ ∈ A`.
#[derive(Clone, Debug)]
pub struct Groupoid<'g> {
    group: &'g FiniteGroup,
    components: Vec<Component>,
    component_of: HashMap<BitSet, usize>,
}

/// Builds the groupoid and its components, refusing groups above `max_order`.
pub fn build_groupoid(group: &FiniteGroup, max_order: usize) -> Result<Groupoid<'_>, GroupoidError> {
    if group.order() > max_order {
        return Err(GroupoidError::SizeCap(format!(
            "groupoid of a group of order {} exceeds the cap {max_order}",
            group.order()
        )));
    }
    let n = group.order();
    let mut vertices: Vec<BitSet> = (0..1u64 << (n - 1)).map(|m| BitSet(1 | m << 1)).collect();
    vertices.sort_by(|a, b| a.lex_cmp(b));
    let mut component_of: HashMap<BitSet, usize> = HashMap::new();
    let mut components = Vec::new();
    for &a in &vertices {
        if component_of.contains_key(&a) {
            continue;
        }
        let index = components.len();
        let mut orbit = Vec::new();
        let mut transversal = Vec::new();
        for g in group.elements() {
            if a.contains(group.inv(g)) {
                let v = group.translate(g, &a);
                if !orbit.contains(&v) {
                    orbit.push(v);
                    transversal.push(g);
                }
            }
        }
        let stab: Vec<usize> = group.elements().filter(|&h| group.translate(h, &a) == a).collect();
        let stabilizer = Subgroup::new(group, stab)?;
        let position = orbit.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let union = orbit.iter().fold(BitSet(0), |acc, v| acc.union(v));
        for v in &orbit {
            component_of.insert(*v, index);
        }
        components.push(Component { index, vertices: orbit, transversal, position, stabilizer, union });
    }
    Ok(Groupoid { group, components, component_of })
}

impl<'g> Groupoid<'g> {
    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component(&self, i: usize) -> Result<&Component, GroupoidError> {
        self.components.get(i).ok_or(GroupoidError::NoSuchComponent(i))
    }

    pub fn component_of(&self, v: BitSet) -> Option<usize> {
        self.component_of.get(&v).copied()
    }

    pub fn target(&self, a: Arrow) -> BitSet {
        self.group.translate(a.elem, &a.source)
    }

    pub fn inverse_arrow(&self, a: Arrow) -> Arrow {
        Arrow { source: self.target(a), elem: self.group.inv(a.elem) }
    }

    pub fn is_arrow(&self, a: Arrow) -> bool {
        a.source.contains(0) && a.source.0 >> self.group.order() == 0 && a.source.contains(self.group.inv(a.elem))
    }

    /// `Σ_Δ n_Δ² |H_Δ|`, which equals the dimension of the partial group algebra.
    pub fn dimension_sum(&self) -> usize {
        self.components.iter().map(|c| c.n() * c.n() * c.stabilizer.order()).sum()
    }
}

/// Element of the groupoid algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidElement {
    field: Field,
    terms: BTreeMap<Arrow, Scalar>,
}

impl GroupoidElement {
    pub fn zero(field: Field) -> Self {
        GroupoidElement { field, terms: BTreeMap::new() }
    }

    pub fn arrow(field: Field, a: Arrow) -> Self {
        let mut x = GroupoidElement::zero(field);
        x.add_term(a, Scalar::one(field));
        x
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Arrow, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, a: &Arrow) -> Scalar {
        self.terms.get(a).cloned().unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn add_term(&mut self, a: Arrow, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&a) {
            Some(v) => {
                let s = &*v + &c;
                if s.is_zero() {
                    self.terms.remove(&a);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(a, c);
            }
        }
    }

    pub fn add(&self, other: &GroupoidElement) -> GroupoidElement {
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(*a, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> GroupoidElement {
        let mut out = GroupoidElement::zero(self.field);
        for (a, v) in &self.terms {
            out.add_term(*a, v * c);
        }
        out
    }
}

impl Groupoid<'_> {
    /// Composition product: `(B, g')(A, g) = (A, g'g)` when `B = gA`, else 0.
    pub fn mul(&self, x: &GroupoidElement, y: &GroupoidElement) -> GroupoidElement {
        let mut out = GroupoidElement::zero(x.field);
        for (b, c) in &x.terms {
            for (a, d) in &y.terms {
                if self.target(*a) == b.source {
                    out.add_term(Arrow { source: a.source, elem: self.group.mul(b.elem, a.elem) }, c * d);
                }
            }
        }
        out
    }

    /// The unit of the component algebra, `Σ_{C ∈ Δ} (C, 1)`.
    pub fn component_unit(&self, comp: &Component, field: Field) -> GroupoidElement {
        let mut out = GroupoidElement::zero(field);
        for &v in comp.vertices() {
            out.add_term(Arrow { source: v, elem: 0 }, Scalar::one(field));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::build_named_group;

    #[test]
    fn c3_components() {
        let g = build_named_group("C3").unwrap();
        let gd = build_groupoid(&g, DEFAULT_MAX_ORDER).unwrap();
        let shapes: Vec<(usize, usize)> = gd.components().iter().map(|c| (c.n(), c.stabilizer().order())).collect();
        assert_eq!(shapes, vec![(1, 1), (2, 1), (1, 3)]);
        let two = &gd.components()[1];
        assert_eq!(two.base(), BitSet::from_elements([0, 1]));
        assert_eq!(two.transversal(), &[0, 2]);
        assert_eq!(gd.dimension_sum(), 8);
    }

    #[test]
    fn klein_components() {
        let g = build_named_group("C2xC2").unwrap();
        let gd = build_groupoid(&g, DEFAULT_MAX_ORDER).unwrap();
        let mut shapes: Vec<(usize, usize)> = gd.components().iter().map(|c| (c.n(), c.stabilizer().order())).collect();
        shapes.sort();
        assert_eq!(shapes, vec![(1, 1), (1, 2), (1, 2), (1, 2), (1, 4), (3, 1)]);
        assert_eq!(gd.dimension_sum(), 20);
    }

    #[test]
    fn trivial_group_and_cap() {
        let g = build_named_group("C1").unwrap();
        let gd = build_groupoid(&g, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(gd.components().len(), 1);
        let big = build_named_group("C9").unwrap();
        assert!(matches!(build_groupoid(&big, DEFAULT_MAX_ORDER), Err(GroupoidError::SizeCap(_))));
    }
}
