use serde::{Deserialize, Serialize};

use crate::groupoid::{GroupRep, PartialRepModule};
use crate::groups::{FiniteGroup, Group};
use crate::linalg::{rank, Scalar, SparseMatrix};

use super::coefficients::CoefficientSystem;
use super::resolution::homotopy_identity_holds;
use super::{HomologyError, DEFAULT_COLUMN_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Bar,
    Ordinary,
    StabilizerSum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variance {
    Homology,
    Cohomology,
}

/// Consistency checks carried out while computing a report. `None` means
/// the check does not apply or was skipped for size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub d2_zero: bool,
    pub homotopy_id: Option<bool>,
    pub h0_tensor: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub group: String,
    pub module: String,
    pub field: String,
    pub method: Method,
    pub kind: Variance,
    pub dims: Vec<usize>,
    pub checks: Checks,
}

/// Column budget for the resolution homotopy check attached to reports.
const HOMOTOPY_CHECK_COLUMNS: usize = 50_000;
/// Ambient budget for the independent `B ⊗_R V` computation.
const TENSOR_CHECK_COLUMNS: usize = 4_096;

fn homology_dims(sys: &CoefficientSystem, max: usize, cap: usize) -> Result<(Vec<usize>, bool), HomologyError> {
    let d: Vec<SparseMatrix> = (1..=max + 1).map(|n| sys.boundary(n, cap)).collect::<Result<_, _>>()?;
    let mut d2_zero = true;
    for w in d.windows(2) {
        d2_zero &= w[0].mul(&w[1])?.is_zero();
    }
    let ranks: Vec<usize> = d.iter().map(rank).collect();
    let dims = (0..=max)
        .map(|n| {
            let len = if n == 0 { d[0].nrows() } else { d[n - 1].ncols() };
            len - if n == 0 { 0 } else { ranks[n - 1] } - ranks[n]
        })
        .collect();
    Ok((dims, d2_zero))
}

fn cohomology_dims(sys: &CoefficientSystem, max: usize, cap: usize) -> Result<(Vec<usize>, bool), HomologyError> {
    let d: Vec<SparseMatrix> = (0..=max).map(|n| sys.coboundary(n, cap)).collect::<Result<_, _>>()?;
    let mut d2_zero = true;
    for w in d.windows(2) {
        d2_zero &= w[1].mul(&w[0])?.is_zero();
    }
    let ranks: Vec<usize> = d.iter().map(rank).collect();
    let dims = (0..=max).map(|n| d[n].ncols() - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] }).collect();
    Ok((dims, d2_zero))
}

fn resolution_check(group: &FiniteGroup, field: crate::linalg::Field, max: usize) -> Result<Option<bool>, HomologyError> {
    let columns = group.order().saturating_pow(max as u32 + 1).saturating_mul(1 << (group.order() - 1));
    if columns > HOMOTOPY_CHECK_COLUMNS {
        return Ok(None);
    }
    for n in 0..=max {
        if !homotopy_identity_holds(group, field, n)? {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

/// `dim_K B ⊗_R V`, from `B ⊗_K V` modulo `b[g] ⊗ v - b ⊗ [g]v` (generators suffice).
pub fn tensor_b_dimension(group: &FiniteGroup, v: &PartialRepModule) -> Result<usize, HomologyError> {
    if v.group_id() != group.id() {
        return Err(crate::groups::GroupError::GroupMismatch.into());
    }
    let (field, dim) = (v.field(), v.dim());
    let nb = 1usize << (group.order() - 1);
    let mut triplets = Vec::new();
    let mut row = 0;
    for g in group.elements() {
        let images = v.matrix(g).transpose();
        for a in 0..nb {
            let set = 1u64 | (a as u64) << 1;
            for j in 0..dim {
                if set >> g & 1 == 1 {
                    let moved = (group.translate(group.inv(g), &crate::groups::BitSet(set)).0 >> 1) as usize;
                    triplets.push((row, moved * dim + j, Scalar::one(field)));
                }
                for (i, c) in images.row(j).entries() {
                    triplets.push((row, a * dim + i, -c));
                }
                row += 1;
            }
        }
    }
    let m = SparseMatrix::from_triplets(field, row, nb * dim, triplets)?;
    Ok(nb * dim - rank(&m))
}

pub fn partial_homology(group: &FiniteGroup, v: &PartialRepModule, max_degree: usize) -> Result<HomologyReport, HomologyError> {
    partial_homology_capped(group, v, max_degree, DEFAULT_COLUMN_CAP)
}

pub fn partial_homology_capped(group: &FiniteGroup, v: &PartialRepModule, max_degree: usize, cap: usize) -> Result<HomologyReport, HomologyError> {
    let sys = CoefficientSystem::partial(group, v)?;
    let (dims, d2_zero) = homology_dims(&sys, max_degree, cap)?;
    let h0_tensor = if (1usize << (group.order() - 1)) * v.dim() <= TENSOR_CHECK_COLUMNS {
        Some(tensor_b_dimension(group, v)? == dims[0])
    } else {
        None
    };
    Ok(HomologyReport {
        group: group.name(),
        module: v.label().to_string(),
        field: v.field().to_string(),
        method: Method::Bar,
        kind: Variance::Homology,
        dims,
        checks: Checks { d2_zero, homotopy_id: resolution_check(group, v.field(), max_degree)?, h0_tensor },
    })
}

pub fn partial_cohomology(group: &FiniteGroup, v: &PartialRepModule, max_degree: usize) -> Result<HomologyReport, HomologyError> {
    partial_cohomology_capped(group, v, max_degree, DEFAULT_COLUMN_CAP)
}

pub fn partial_cohomology_capped(group: &FiniteGroup, v: &PartialRepModule, max_degree: usize, cap: usize) -> Result<HomologyReport, HomologyError> {
    let sys = CoefficientSystem::partial(group, v)?;
    let (dims, d2_zero) = cohomology_dims(&sys, max_degree, cap)?;
    Ok(HomologyReport {
        group: group.name(),
        module: v.label().to_string(),
        field: v.field().to_string(),
        method: Method::Bar,
        kind: Variance::Cohomology,
        dims,
        checks: Checks { d2_zero, homotopy_id: resolution_check(group, v.field(), max_degree)?, h0_tensor: None },
    })
}

fn subgroup_name(group: &FiniteGroup, u: &GroupRep) -> String {
    let names: Vec<String> = u.elements().iter().map(|&h| group.elem_name(h)).collect();
    format!("<{}> in {}", names.join(","), group.name())
}

/// `H_n(H, U)` from the standard bar complex, with the left representation
/// made a right module by `u·h = U(h⁻¹)u`.
pub fn group_homology(group: &FiniteGroup, u: &GroupRep, max_degree: usize) -> Result<HomologyReport, HomologyError> {
    let sys = CoefficientSystem::ordinary(group, u)?;
    let (dims, d2_zero) = homology_dims(&sys, max_degree, DEFAULT_COLUMN_CAP)?;
    Ok(HomologyReport {
        group: subgroup_name(group, u),
        module: u.label().to_string(),
        field: u.field().to_string(),
        method: Method::Ordinary,
        kind: Variance::Homology,
        dims,
        checks: Checks { d2_zero, homotopy_id: None, h0_tensor: None },
    })
}

/// `H^n(H, U)` from the standard bar complex.
pub fn group_cohomology(group: &FiniteGroup, u: &GroupRep, max_degree: usize) -> Result<HomologyReport, HomologyError> {
    let sys = CoefficientSystem::ordinary(group, u)?;
    let (dims, d2_zero) = cohomology_dims(&sys, max_degree, DEFAULT_COLUMN_CAP)?;
    Ok(HomologyReport {
        group: subgroup_name(group, u),
        module: u.label().to_string(),
        field: u.field().to_string(),
        method: Method::Ordinary,
        kind: Variance::Cohomology,
        dims,
        checks: Checks { d2_zero, homotopy_id: None, h0_tensor: None },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::{b_module, regular_module, Side};
    use crate::groups::{build_named_group, Subgroup};
    use crate::linalg::Field;

    fn whole(g: &FiniteGroup) -> Subgroup {
        Subgroup::new(g, g.elements().collect()).unwrap()
    }

    #[test]
    fn ordinary_trivial_coefficients() {
        let c2 = build_named_group("C2").unwrap();
        let f2 = Field::prime(2).unwrap();
        let r = group_homology(&c2, &GroupRep::trivial(&c2, &whole(&c2), f2), 3).unwrap();
        assert_eq!(r.dims, vec![1, 1, 1, 1]);
        assert!(r.checks.d2_zero);
        let c3 = build_named_group("C3").unwrap();
        let r = group_homology(&c3, &GroupRep::trivial(&c3, &whole(&c3), Field::Rational), 2).unwrap();
        assert_eq!(r.dims, vec![1, 0, 0]);
        let one = Subgroup::new(&c3, vec![0]).unwrap();
        let reg = GroupRep::regular(&c3, &whole(&c3), Field::Rational);
        assert_eq!(group_cohomology(&c3, &reg, 2).unwrap().dims, vec![1, 0, 0]);
        assert_eq!(group_homology(&c3, &GroupRep::trivial(&c3, &one, Field::Rational), 2).unwrap().dims, vec![1, 0, 0]);
    }

    #[test]
    fn b_module_over_f2() {
        let c2 = build_named_group("C2").unwrap();
        let f2 = Field::prime(2).unwrap();
        let b = b_module(&c2, Side::Left, f2).unwrap();
        let h = partial_homology(&c2, &b, 2).unwrap();
        assert_eq!(h.dims, vec![2, 1, 1]);
        assert_eq!(h.checks, Checks { d2_zero: true, homotopy_id: Some(true), h0_tensor: Some(true) });
        assert_eq!(partial_cohomology(&c2, &b, 2).unwrap().dims, vec![2, 1, 1]);
    }

    #[test]
    fn regular_coefficients_are_acyclic() {
        let c2 = build_named_group("C2").unwrap();
        for field in [Field::Rational, Field::prime(2).unwrap()] {
            let r = regular_module(&c2, Side::Left, field).unwrap();
            let h = partial_homology(&c2, &r, 2).unwrap();
            assert_eq!(&h.dims[1..], &[0, 0]);
            assert_eq!(h.checks.h0_tensor, Some(true));
            assert_eq!(&partial_cohomology(&c2, &r, 2).unwrap().dims[1..], &[0, 0]);
        }
    }

    #[test]
    fn wrong_side_is_rejected() {
        let c2 = build_named_group("C2").unwrap();
        let r = regular_module(&c2, Side::Right, Field::Rational).unwrap();
        assert!(matches!(partial_homology(&c2, &r, 1), Err(HomologyError::InvalidModule(_))));
    }

    #[test]
    fn cap_is_enforced() {
        let c3 = build_named_group("C3").unwrap();
        let b = b_module(&c3, Side::Left, Field::Rational).unwrap();
        assert!(matches!(partial_homology_capped(&c3, &b, 3, 10), Err(HomologyError::SizeCap(_))));
    }
}
