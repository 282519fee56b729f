use rand::Rng;

use crate::exel::{AlgElem, IdempotentUniverse, PartialGroupAlgebra};
use crate::groups::Group;
use crate::linalg::{Scalar, SparseVector};

use super::ZError;

fn check_idempotents<G: Group>(alg: &PartialGroupAlgebra<G>, es: &[AlgElem<G>]) -> Result<(), ZError> {
    for (i, e) in es.iter().enumerate() {
        if !alg.is_in_b(e) {
            return Err(ZError::NotInB(i));
        }
        if alg.mul(e, e) != *e {
            return Err(ZError::NotIdempotent(i));
        }
    }
    Ok(())
}

/// `e₁, (1 - e₁)e₂, …, (1 - e₁)⋯(1 - e_{n-1})e_n`, checked pairwise orthogonal.
pub fn idempotent_summands<G: Group>(alg: &PartialGroupAlgebra<G>, es: &[AlgElem<G>]) -> Result<Vec<AlgElem<G>>, ZError> {
    check_idempotents(alg, es)?;
    let mut rest = alg.one();
    let mut out: Vec<AlgElem<G>> = Vec::with_capacity(es.len());
    for e in es {
        out.push(alg.mul(&rest, e));
        rest = alg.mul(&rest, &alg.one().sub(e));
    }
    for i in 0..out.len() {
        for j in 0..i {
            if !alg.mul(&out[i], &out[j]).is_zero() {
                return Err(ZError::Internal(format!("summands {j} and {i} are not orthogonal")));
            }
        }
    }
    Ok(out)
}

/// `e = e₁ + (1 - e₁)e₂ + … + (1 - e₁)⋯(1 - e_{n-1})e_n`, with `Be = Σ Be_i`.
pub fn combine_idempotents<G: Group>(alg: &PartialGroupAlgebra<G>, es: &[AlgElem<G>]) -> Result<AlgElem<G>, ZError> {
    let e = idempotent_summands(alg, es)?.iter().fold(alg.zero(), |acc, s| acc.add(s));
    debug_assert_eq!(alg.mul(&e, &e), e);
    Ok(e)
}

/// `r = M e + b`: `r_i = Σ_j M_ij e_j + b_i (1 - e_i)` with `M` skew-symmetric.
#[derive(Clone, Debug)]
pub struct CancellationResult<G: Group> {
    pub m: Vec<Vec<AlgElem<G>>>,
    pub b: Vec<AlgElem<G>>,
}

impl<G: Group> CancellationResult<G> {
    pub fn is_skew(&self) -> bool {
        let k = self.b.len();
        (0..k).all(|i| self.m[i][i].is_zero() && (0..i).all(|j| self.m[i][j] == self.m[j][i].neg()))
    }

    pub fn reconstructs(&self, alg: &PartialGroupAlgebra<G>, es: &[AlgElem<G>], rs: &[AlgElem<G>]) -> bool {
        rs.iter().enumerate().all(|(i, r)| {
            let mut acc = alg.mul(&self.b[i], &alg.one().sub(&es[i]));
            for (j, e) in es.iter().enumerate() {
                acc = acc.add(&alg.mul(&self.m[i][j], e));
            }
            acc == *r
        })
    }
}

fn decompose<G: Group>(alg: &PartialGroupAlgebra<G>, es: &[AlgElem<G>], rs: &[AlgElem<G>]) -> CancellationResult<G> {
    let k = es.len();
    let zero = alg.zero();
    match k {
        // r₁e₁ = 0 gives r₁ = r₁(1 - e₁)
        1 => CancellationResult { m: vec![vec![zero]], b: vec![rs[0].clone()] },
        2 => {
            let r = &rs[1];
            CancellationResult {
                m: vec![vec![zero.clone(), r.neg()], vec![r.clone(), zero]],
                b: vec![rs[0].add(&alg.mul(r, &es[1])), rs[1].sub(&alg.mul(r, &es[0]))],
            }
        }
        _ => {
            let last = &es[k - 1];
            let not_last = alg.one().sub(last);
            let scaled: Vec<AlgElem<G>> = es[..k - 1].iter().map(|e| alg.mul(e, &not_last)).collect();
            let sub = decompose(alg, &scaled, &rs[..k - 1]);
            let mut m = vec![vec![zero.clone(); k]; k];
            for i in 0..k - 1 {
                for (j, x) in sub.m[i].iter().enumerate() {
                    m[i][j] = alg.mul(x, &not_last);
                }
                let col = alg.mul(&sub.b[i], &es[i]);
                m[k - 1][i] = col.neg();
                m[i][k - 1] = col;
            }
            let mut b = sub.b;
            let bk = (0..k - 1).fold(rs[k - 1].clone(), |acc, j| acc.add(&alg.mul(&b[j], &es[j])));
            b.push(bk);
            CancellationResult { m, b }
        }
    }
}

/// Skew-symmetric decomposition of a relation `Σ r_i e_i = 0` in `B`, by
/// induction on `k`: peel off `e_k` and recurse on the idempotents
/// `e_j(1 - e_k)`. The result is verified before it is returned.
pub fn cancellation_decompose<G: Group>(
    alg: &PartialGroupAlgebra<G>,
    es: &[AlgElem<G>],
    rs: &[AlgElem<G>],
) -> Result<CancellationResult<G>, ZError> {
    if es.len() != rs.len() {
        return Err(ZError::LengthMismatch { expected: es.len(), got: rs.len() });
    }
    if es.is_empty() {
        return Ok(CancellationResult { m: Vec::new(), b: Vec::new() });
    }
    check_idempotents(alg, es)?;
    if let Some(i) = rs.iter().position(|r| !alg.is_in_b(r)) {
        return Err(ZError::NotInB(i));
    }
    let total = es.iter().zip(rs).fold(alg.zero(), |acc, (e, r)| acc.add(&alg.mul(r, e)));
    if !total.is_zero() {
        return Err(ZError::Hypothesis);
    }
    let out = decompose(alg, es, rs);
    if !out.is_skew() || !out.reconstructs(alg, es, rs) {
        return Err(ZError::Internal("cancellation decomposition failed its own check".into()));
    }
    Ok(out)
}

/// A random relation `Σ r_i e_i = 0` of length `k` in the Boolean algebra
/// spanned by `universe`: each `e_i` is a random sum of primitive
/// idempotents and each `r_i` has small integer primitive coordinates,
/// corrected on one index per primitive so that the relation holds.
pub fn random_instance<G: Group, R: Rng>(
    alg: &PartialGroupAlgebra<G>,
    universe: &IdempotentUniverse<G>,
    k: usize,
    rng: &mut R,
) -> (Vec<AlgElem<G>>, Vec<AlgElem<G>>) {
    let field = alg.field();
    let np = universe.num_primitives();
    let support: Vec<Vec<bool>> = (0..k).map(|_| (0..np).map(|_| rng.random_bool(0.5)).collect()).collect();
    let mut coords: Vec<Vec<i64>> = (0..k).map(|_| (0..np).map(|_| rng.random_range(-3..=3)).collect()).collect();
    for p in 0..np {
        let holders: Vec<usize> = (0..k).filter(|&i| support[i][p]).collect();
        if let Some((&fix, others)) = holders.split_last() {
            coords[fix][p] = -others.iter().map(|&i| coords[i][p]).sum::<i64>();
        }
    }
    let to_elem = |values: Vec<(usize, i64)>| {
        let v = SparseVector::from_entries(field, np, values.into_iter().map(|(p, c)| (p, Scalar::from_int(field, c))))
            .expect("in range");
        universe.from_primitive(&v)
    };
    let es = support.iter().map(|s| to_elem((0..np).filter(|&p| s[p]).map(|p| (p, 1)).collect())).collect();
    let rs = coords.into_iter().map(|c| to_elem(c.into_iter().enumerate().collect())).collect();
    (es, rs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_named_group, Integers};
    use crate::linalg::Field;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn two_equal_idempotents_in_c2() {
        let g = build_named_group("C2").unwrap();
        let k = PartialGroupAlgebra::new(&g, Field::Rational);
        let ea = k.idempotent(1);
        let (es, rs) = (vec![ea.clone(), ea.clone()], vec![k.one(), k.one().neg()]);
        let out = cancellation_decompose(&k, &es, &rs).unwrap();
        assert_eq!(out.m, vec![vec![k.zero(), k.one()], vec![k.one().neg(), k.zero()]]);
        let not_a = k.one().sub(&ea);
        assert_eq!(k.mul(&out.b[0], &not_a), not_a);
        assert_eq!(k.mul(&out.b[1], &not_a), not_a.neg());
    }

    #[test]
    fn zero_relation_and_bad_inputs() {
        let g = build_named_group("C3").unwrap();
        let k = PartialGroupAlgebra::new(&g, Field::Rational);
        let es = vec![k.idempotent(1), k.idempotent(2), k.one()];
        let out = cancellation_decompose(&k, &es, &vec![k.zero(); 3]).unwrap();
        assert!(out.m.iter().flatten().chain(&out.b).all(|x| x.is_zero()));
        assert!(matches!(cancellation_decompose(&k, &es, &[k.one(), k.zero(), k.zero()]), Err(ZError::Hypothesis)));
        let two = k.idempotent(1).scale(&k.scalar(2));
        assert!(matches!(cancellation_decompose(&k, &[two], &[k.zero()]), Err(ZError::NotIdempotent(0))));
        assert!(matches!(cancellation_decompose(&k, &[k.generator(1)], &[k.zero()]), Err(ZError::NotInB(0))));
    }

    #[test]
    fn random_relations_decompose() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let z = Integers;
        let k = PartialGroupAlgebra::new(&z, Field::Rational);
        let u = IdempotentUniverse::new(&z, -2..=2).unwrap();
        for len in 1..=5 {
            let (es, rs) = random_instance(&k, &u, len, &mut rng);
            let out = cancellation_decompose(&k, &es, &rs).unwrap();
            assert!(out.is_skew() && out.reconstructs(&k, &es, &rs));
        }
    }

    #[test]
    fn combining() {
        let z = Integers;
        let k = PartialGroupAlgebra::new(&z, Field::Rational);
        let (e1, e2) = (k.idempotent(1), k.idempotent(2));
        assert_eq!(combine_idempotents(&k, std::slice::from_ref(&e1)).unwrap(), e1);
        assert_eq!(combine_idempotents(&k, &[e1.clone(), e1.clone()]).unwrap(), e1);
        let e = combine_idempotents(&k, &[e1.clone(), e2.clone()]).unwrap();
        assert_eq!(e, e1.add(&k.mul(&k.one().sub(&e1), &e2)));
        assert_eq!(k.mul(&e, &e), e);
        assert!(matches!(combine_idempotents(&k, &[k.generator(1)]), Err(ZError::NotInB(0))));
    }
}
