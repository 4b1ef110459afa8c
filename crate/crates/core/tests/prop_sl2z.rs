use mcg_core::poly::IntPolynomial;
use mcg_core::sl2z::{
    element_order, exhaustive_box_roots, mth_roots, torsion_class, trace_polynomials, Order, RootSet, TorsionLabel,
};
use mcg_core::Sl2Matrix;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;

/// Products of `S`, `T`, `T^-1`.
fn word_matrix(max_len: usize) -> impl Strategy<Value = Sl2Matrix> {
    prop::collection::vec(0u8..3, 0..=max_len).prop_map(|w| {
        let gens = [Sl2Matrix::s(), Sl2Matrix::t(), Sl2Matrix::t().inverse()];
        w.iter().fold(Sl2Matrix::identity(), |acc, &g| acc.mul(&gens[g as usize]))
    })
}

/// Powers `R^j`, `j <= 4`, of matrices with entries in `[-3, 3]`.
fn small_power() -> impl Strategy<Value = Sl2Matrix> {
    let mut box3 = Vec::new();
    for a in -3..=3i64 {
        for b in -3..=3 {
            for c in -3..=3 {
                for d in -3..=3 {
                    if let Ok(r) = Sl2Matrix::from_i64(a, b, c, d) {
                        box3.push(r);
                    }
                }
            }
        }
    }
    (prop::sample::select(box3), 1u64..=4).prop_map(|(r, j)| r.pow(j))
}

fn scalar(p: &IntPolynomial, t: &BigInt) -> BigInt {
    p.eval(t)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn finite_order_iff_small_trace(m in word_matrix(12)) {
        let t = m.trace();
        let small = t.abs() <= BigInt::one() || m.is_central();
        match element_order(&m) {
            Order::Finite(k) => {
                prop_assert!(small);
                prop_assert!([1, 2, 3, 4, 6].contains(&k));
                prop_assert!(m.pow(u64::from(k)).is_identity());
                prop_assert!((1..k).all(|j| !m.pow(u64::from(j)).is_identity()));
            }
            Order::Infinite => prop_assert!(!small),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn trace_polynomial_contract(r in word_matrix(10), m in 1u32..=8) {
        let (pm1, pm) = trace_polynomials(m).unwrap();
        let t = r.trace();
        let (a, b) = (scalar(&pm, &t), scalar(&pm1, &t));
        let rm = r.pow(u64::from(m));
        let e = r.entries();
        prop_assert_eq!(rm.a(), &(&a * e[0] - &b));
        prop_assert_eq!(rm.b(), &(&a * e[1]));
        prop_assert_eq!(rm.c(), &(&a * e[2]));
        prop_assert_eq!(rm.d(), &(&a * e[3] - &b));
    }

    #[test]
    fn torsion_class_is_conjugation_invariant(g in word_matrix(12)) {
        for label in TorsionLabel::ALL {
            let conj = label.representative().conjugate_by(&g);
            prop_assert_eq!(torsion_class(&conj).unwrap(), label);
        }
    }

    #[test]
    fn roots_are_roots_and_come_in_sign_pairs(r in word_matrix(8), m in 1u32..=6) {
        let target = r.pow(u64::from(m));
        match mth_roots(&target, m).unwrap() {
            RootSet::Finite { roots } => {
                prop_assert!(roots.len() <= 2);
                for x in &roots {
                    prop_assert_eq!(&x.pow(u64::from(m)), &target);
                }
                if let [x, y] = roots.as_slice() {
                    prop_assert_eq!(&x.neg(), y);
                }
                if !target.is_central() {
                    prop_assert!(roots.contains(&r));
                }
            }
            RootSet::TorsionFamily { representatives } => {
                prop_assert!(target.is_central() && m >= 2);
                for l in representatives {
                    prop_assert_eq!(&l.representative().pow(u64::from(m)), &target);
                }
            }
        }
    }

    #[test]
    fn roots_match_literal_box_search(target in small_power(), m in 1u32..=4) {
        prop_assume!(!target.is_central());
        let RootSet::Finite { roots } = mth_roots(&target, m).unwrap() else {
            return Err(TestCaseError::fail("non-central matrix gave a torsion family"));
        };
        let mut inside: Vec<_> = roots.into_iter().filter(|x| x.max_abs_entry() <= BigInt::from(3)).collect();
        inside.sort();
        prop_assert_eq!(inside, exhaustive_box_roots(&target, m, 3));
    }
}
