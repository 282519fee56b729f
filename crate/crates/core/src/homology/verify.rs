use serde::Serialize;

use crate::groupoid::{b_module, build_groupoid, regular_module, Component, GroupRep, Groupoid, Side, DEFAULT_MAX_ORDER};
use crate::groups::{FiniteGroup, Group};
use crate::linalg::Field;

use super::compute::{group_cohomology, group_homology, partial_cohomology, partial_homology, Variance};
use super::HomologyError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub kind: Variance,
    pub degree: usize,
}

fn first_mismatch(h: (&[usize], &[usize]), c: (&[usize], &[usize])) -> Option<Mismatch> {
    let find = |a: &[usize], b: &[usize], kind| {
        (0..a.len().max(b.len())).find(|&i| a.get(i) != b.get(i)).map(|degree| Mismatch { kind, degree })
    };
    find(h.0, h.1, Variance::Homology).or_else(|| find(c.0, c.1, Variance::Cohomology))
}

/// Partial (co)homology with coefficients induced from a representation of
/// an isotropy group, against ordinary (co)homology of that group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremAReport {
    pub group: String,
    pub component: usize,
    pub isotropy_order: usize,
    pub representation: String,
    pub field: String,
    pub homology_partial: Vec<usize>,
    pub homology_ordinary: Vec<usize>,
    pub cohomology_partial: Vec<usize>,
    pub cohomology_ordinary: Vec<usize>,
    pub equal: bool,
    pub first_mismatch: Option<Mismatch>,
}

pub fn verify_theorem_a(gd: &Groupoid, comp: &Component, u: &GroupRep, max_degree: usize) -> Result<TheoremAReport, HomologyError> {
    let group = gd.group();
    let v = gd.induce_module(comp, u)?;
    let hp = partial_homology(group, &v, max_degree)?.dims;
    let cp = partial_cohomology(group, &v, max_degree)?.dims;
    let ho = group_homology(group, u, max_degree)?.dims;
    let co = group_cohomology(group, u, max_degree)?.dims;
    let first_mismatch = first_mismatch((&hp, &ho), (&cp, &co));
    Ok(TheoremAReport {
        group: group.name(),
        component: comp.index(),
        isotropy_order: comp.stabilizer().order(),
        representation: u.label().to_string(),
        field: u.field().to_string(),
        equal: first_mismatch.is_none(),
        homology_partial: hp,
        homology_ordinary: ho,
        cohomology_partial: cp,
        cohomology_ordinary: co,
        first_mismatch,
    })
}

/// Partial (co)homology with coefficients in `B` against the sum over the
/// components of the ordinary (co)homology of their isotropy groups with
/// trivial coefficients. `equal` covers both homology and cohomology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryBReport {
    pub dims_bar: Vec<usize>,
    pub dims_sum: Vec<usize>,
    pub equal: bool,
    pub cohomology_bar: Vec<usize>,
    pub cohomology_sum: Vec<usize>,
    pub group: String,
    pub field: String,
    pub components: usize,
    pub isotropy_orders: Vec<usize>,
    pub first_mismatch: Option<Mismatch>,
}

fn add_into(acc: &mut Vec<usize>, dims: &[usize]) {
    acc.resize(acc.len().max(dims.len()), 0);
    for (a, d) in acc.iter_mut().zip(dims) {
        *a += d;
    }
}

pub fn verify_corollary_b(group: &FiniteGroup, field: Field, max_degree: usize) -> Result<CorollaryBReport, HomologyError> {
    let gd = build_groupoid(group, DEFAULT_MAX_ORDER)?;
    let b = b_module(group, Side::Left, field)?;
    let dims_bar = partial_homology(group, &b, max_degree)?.dims;
    let cohomology_bar = partial_cohomology(group, &b, max_degree)?.dims;
    let (mut dims_sum, mut cohomology_sum) = (Vec::new(), Vec::new());
    for comp in gd.components() {
        let u = GroupRep::trivial(group, comp.stabilizer(), field);
        add_into(&mut dims_sum, &group_homology(group, &u, max_degree)?.dims);
        add_into(&mut cohomology_sum, &group_cohomology(group, &u, max_degree)?.dims);
    }
    let first_mismatch = first_mismatch((&dims_bar, &dims_sum), (&cohomology_bar, &cohomology_sum));
    Ok(CorollaryBReport {
        equal: first_mismatch.is_none(),
        dims_bar,
        dims_sum,
        cohomology_bar,
        cohomology_sum,
        group: group.name(),
        field: field.to_string(),
        components: gd.components().len(),
        isotropy_orders: gd.components().iter().map(|c| c.stabilizer().order()).collect(),
        first_mismatch,
    })
}

/// Partial cohomology with coefficients in the partial group algebra itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub group: String,
    pub field: String,
    pub dims: Vec<usize>,
    pub vanishing: bool,
}

pub fn verify_vanishing(group: &FiniteGroup, field: Field, max_degree: usize) -> Result<VanishingReport, HomologyError> {
    let v = regular_module(group, Side::Left, field)?;
    let dims = partial_cohomology(group, &v, max_degree)?.dims;
    Ok(VanishingReport {
        group: group.name(),
        field: field.to_string(),
        vanishing: dims.iter().skip(1).all(|&d| d == 0),
        dims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::build_named_group;

    #[test]
    fn corollary_b_small_cases() {
        let c2 = build_named_group("C2").unwrap();
        let r = verify_corollary_b(&c2, Field::prime(2).unwrap(), 3).unwrap();
        assert_eq!((r.dims_bar.clone(), r.dims_sum.clone(), r.equal), (vec![2, 1, 1, 1], vec![2, 1, 1, 1], true));
        let c3 = build_named_group("C3").unwrap();
        let r = verify_corollary_b(&c3, Field::prime(3).unwrap(), 2).unwrap();
        assert_eq!(r.dims_bar, vec![3, 1, 1]);
        assert!(r.equal);
    }

    #[test]
    fn theorem_a_two_vertex_component() {
        let c3 = build_named_group("C3").unwrap();
        let gd = build_groupoid(&c3, DEFAULT_MAX_ORDER).unwrap();
        let comp = &gd.components()[1];
        let u = GroupRep::trivial(&c3, comp.stabilizer(), Field::Rational);
        let r = verify_theorem_a(&gd, comp, &u, 2).unwrap();
        assert!(r.equal, "{r:?}");
        assert_eq!(r.homology_partial, vec![1, 0, 0]);
        assert_eq!(r.cohomology_partial, vec![1, 0, 0]);
    }

    #[test]
    fn vanishing_for_c3() {
        let c3 = build_named_group("C3").unwrap();
        let r = verify_vanishing(&c3, Field::prime(3).unwrap(), 2).unwrap();
        assert!(r.vanishing, "{r:?}");
    }
}
