mod common;

use common::bar::trivial_homology_mod_p;
use parh_core::exel::{IdempotentUniverse, PartialGroupAlgebra};
use parh_core::groupoid::GroupRep;
use parh_core::groups::{build_named_group, Integers, Subgroup};
use parh_core::homology::group_homology;
use parh_core::linalg::{Field, SparseMatrix};
use parh_core::zcase;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime(2)), Just(Field::Prime(5))]
}

fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-2i64..=2, c), r))
}

#[test]
fn ordinary_homology_matches_bar_oracle() {
    for name in ["C2", "C3", "C4", "C2xC2", "S3"] {
        let g = build_named_group(name).unwrap();
        let whole = Subgroup::new(&g, g.elements().collect()).unwrap();
        let table = g.cayley_table();
        for p in [2u32, 3] {
            let u = GroupRep::trivial(&g, &whole, Field::Prime(p));
            let got = group_homology(&g, &u, 3).unwrap().dims;
            assert_eq!(got, trivial_homology_mod_p(&table, p as u64, 3), "{name} over F{p}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(rows in matrix_strategy(), field in field_strategy()) {
        let m = SparseMatrix::from_int_rows(field, &rows);
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.ncols());
        prop_assert_eq!(m.rank(), m.transpose().rank());
        for v in &kernel {
            prop_assert!(m.apply(v).unwrap().is_zero());
        }
    }

    #[test]
    fn inverse_is_two_sided(rows in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 4), field in field_strategy()) {
        let m = SparseMatrix::from_int_rows(field, &rows);
        match m.inverse() {
            Ok(inv) => {
                let id = SparseMatrix::identity(field, 4);
                prop_assert_eq!(m.mul(&inv).unwrap(), id.clone());
                prop_assert_eq!(inv.mul(&m).unwrap(), id);
            }
            Err(_) => prop_assert!(m.rank() < 4),
        }
    }

    #[test]
    fn augmentation_ideal_round_trip(seed in any::<u64>(), bound in 2i64..=4, terms in 1usize..8) {
        let alg = PartialGroupAlgebra::new(&Integers, Field::Rational);
        let window = zcase::Window::new(bound).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = zcase::random_ig_element(&alg, &window, terms, &mut rng);
        prop_assert!(alg.augmentation(&x).is_zero());
        let parts = zcase::ig_decompose(&alg, &x).unwrap();
        let mut sum = alg.zero();
        for (&g, b) in &parts {
            prop_assert!(alg.is_in_b(b));
            sum = sum.add(&alg.mul(b, &zcase::f_z(&alg, g)));
        }
        prop_assert_eq!(sum, x);
    }

    #[test]
    fn summands_are_orthogonal(seed in any::<u64>(), k in 1usize..6) {
        let g = build_named_group("C2xC2").unwrap();
        let alg = PartialGroupAlgebra::new(&g, Field::Prime(3));
        let u = IdempotentUniverse::whole(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (es, _) = zcase::random_instance(&alg, &u, k, &mut rng);
        let parts = zcase::idempotent_summands(&alg, &es).unwrap();
        for i in 0..k {
            prop_assert_eq!(alg.mul(&parts[i], &parts[i]), parts[i].clone());
            for j in 0..i {
                prop_assert!(alg.mul(&parts[i], &parts[j]).is_zero());
            }
        }
        let e = zcase::combine_idempotents(&alg, &es).unwrap();
        for x in &es {
            prop_assert_eq!(alg.mul(&e, x), x.clone());
        }
    }

    #[test]
    fn cancellation_is_skew_and_exact(seed in any::<u64>(), k in 1usize..6) {
        let alg = PartialGroupAlgebra::new(&Integers, Field::Rational);
        let u = IdempotentUniverse::new(&Integers, -2..=2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (es, rs) = zcase::random_instance(&alg, &u, k, &mut rng);
        let mut relation = alg.zero();
        for (r, e) in rs.iter().zip(&es) {
            relation = relation.add(&alg.mul(r, e));
        }
        prop_assert!(relation.is_zero());
        let out = zcase::cancellation_decompose(&alg, &es, &rs).unwrap();
        prop_assert!(out.is_skew());
        prop_assert!(out.reconstructs(&alg, &es, &rs));
    }
}
