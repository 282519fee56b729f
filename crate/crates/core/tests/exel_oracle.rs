mod common;

use common::skew::{arrow_operator, SkewModel};
use parh_core::exel::{s_inv, s_mul, IdempotentUniverse, PartialGroupAlgebra, SElem};
use parh_core::groups::{build_named_group, ElemSet, FiniteGroup, Group, IntSet, Integers};
use parh_core::linalg::Field;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn finite_model(g: &FiniteGroup) -> SkewModel<usize, impl Fn(usize, usize) -> usize + '_, impl Fn(usize) -> usize + '_> {
    SkewModel { identity: 0, mul: move |a, b| g.mul(a, b), inv: move |a| g.inv(a) }
}

fn word_of(g: &FiniteGroup, s: &SElem<FiniteGroup>) -> Vec<usize> {
    finite_model(g).basis_word(&s.set().elements(), s.elem())
}

#[test]
fn finite_products_match_skew_model() {
    for name in ["C1", "C2", "C3", "C4", "C2xC2"] {
        let g = build_named_group(name).unwrap();
        let k = PartialGroupAlgebra::new(&g, Field::Rational);
        let model = finite_model(&g);
        let basis = k.canonical_basis();
        for x in &basis {
            for y in &basis {
                let z = s_mul(&g, x, y);
                let concat = [word_of(&g, x), word_of(&g, y)].concat();
                let expected = model.word(&concat);
                let got = model.word(&word_of(&g, &z));
                assert_eq!(got, expected, "{name}: {x:?} * {y:?}");
                // the canonical form itself is the skew label set plus the identity
                let mut labels: Vec<usize> = expected.labels.iter().copied().collect();
                labels.insert(0, 0);
                assert_eq!(z.set().elements(), labels);
                assert_eq!(z.elem(), expected.elem);
            }
        }
    }
}

#[test]
fn finite_products_match_arrow_representation() {
    for name in ["C2", "C3", "C4", "C2xC2"] {
        let g = build_named_group(name).unwrap();
        let table = g.cayley_table();
        let k = PartialGroupAlgebra::new(&g, Field::Rational);
        let basis = k.canonical_basis();
        for x in &basis {
            for y in &basis {
                let z = s_mul(&g, x, y);
                let concat = [word_of(&g, x), word_of(&g, y)].concat();
                assert_eq!(arrow_operator(&table, &concat), arrow_operator(&table, &word_of(&g, &z)));
            }
        }
        // distinct basis elements act differently
        let ops: std::collections::BTreeSet<_> = basis.iter().map(|s| arrow_operator(&table, &word_of(&g, s))).collect();
        assert_eq!(ops.len(), basis.len());
    }
}

fn random_window_element(rng: &mut ChaCha8Rng, n: i64) -> SElem<Integers> {
    let g = rng.random_range(-n..=n);
    let mut set = IntSet::from_elements([0, g]);
    for x in -n..=n {
        if rng.random_bool(0.3) {
            set.insert(x);
        }
    }
    parh_core::exel::s_element(&Integers, set, g).unwrap()
}

#[test]
fn integer_products_match_skew_model() {
    let z = Integers;
    let model = SkewModel { identity: 0i64, mul: |a: i64, b: i64| a + b, inv: |a: i64| -a };
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..1000 {
        let x = random_window_element(&mut rng, 6);
        let y = random_window_element(&mut rng, 6);
        let z_ = s_mul(&z, &x, &y);
        let wx = model.basis_word(&x.set().elements(), x.elem());
        let wy = model.basis_word(&y.set().elements(), y.elem());
        let expected = model.word(&[wx, wy].concat());
        let got = model.word(&model.basis_word(&z_.set().elements(), z_.elem()));
        assert_eq!(got, expected);
    }
}

fn elem_strategy(order: usize) -> impl Strategy<Value = (u64, usize)> {
    (0..1u64 << (order - 1), 0..order)
}

proptest! {
    #[test]
    fn product_is_associative(a in elem_strategy(6), b in elem_strategy(6), c in elem_strategy(6)) {
        let g = build_named_group("S3").unwrap();
        let mk = |(m, x): (u64, usize)| {
            let set = parh_core::groups::BitSet(1 | m << 1 | 1 << x);
            parh_core::exel::s_element(&g, set, x).unwrap()
        };
        let (x, y, z) = (mk(a), mk(b), mk(c));
        prop_assert_eq!(s_mul(&g, &s_mul(&g, &x, &y), &z), s_mul(&g, &x, &s_mul(&g, &y, &z)));
        // star is an involutive anti-automorphism
        prop_assert_eq!(s_inv(&g, &s_mul(&g, &x, &y)), s_mul(&g, &s_inv(&g, &y), &s_inv(&g, &x)));
        prop_assert_eq!(s_inv(&g, &s_inv(&g, &x)), x.clone());
        // x x* x = x
        prop_assert_eq!(s_mul(&g, &s_mul(&g, &x, &s_inv(&g, &x)), &x), x);
    }

    #[test]
    fn text_round_trip(coeffs in proptest::collection::vec(-3i64..=3, 8)) {
        let g = build_named_group("C3").unwrap();
        let k = PartialGroupAlgebra::new(&g, Field::Rational);
        let mut x = k.zero();
        for (s, c) in k.canonical_basis().into_iter().zip(coeffs) {
            x = x.add(&k.basis(s).scale(&k.scalar(c)));
        }
        prop_assert_eq!(k.parse(&k.render(&x)).unwrap(), x);
    }

    #[test]
    fn primitive_coordinates_are_multiplicative(m1 in 0u64..8, m2 in 0u64..8) {
        let g = build_named_group("C2xC2").unwrap();
        let k = PartialGroupAlgebra::new(&g, Field::Prime(3));
        let u = IdempotentUniverse::whole(&g);
        let a = k.idempotent_of(&parh_core::groups::BitSet(1 | m1 << 1)).add(&k.one());
        let b = k.idempotent_of(&parh_core::groups::BitSet(1 | m2 << 1)).scale(&k.scalar(2));
        let (va, vb, vab) = (u.to_primitive(&a).unwrap(), u.to_primitive(&b).unwrap(), u.to_primitive(&k.mul(&a, &b)).unwrap());
        for i in 0..8 {
            prop_assert_eq!(&va.get(i) * &vb.get(i), vab.get(i));
        }
    }
}
