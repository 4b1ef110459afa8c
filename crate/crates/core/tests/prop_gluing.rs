use mcg_core::gluing::{analyze, f_pattern, g_pattern, induced_h1};
use mcg_core::poly::char_poly;
use mcg_core::{GluingPattern, IntPolynomial};
use proptest::prelude::*;

/// Random pairing on `2h` arcs commuting with the half turn `i -> i + h`:
/// rotation orbits are matched to themselves or to each other.
fn half_turn_pattern() -> impl Strategy<Value = GluingPattern> {
    (1usize..=8).prop_flat_map(|h| {
        (Just(h), Just((0..h).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<(bool, bool)>(), h))
    })
    .prop_map(|(h, order, flags)| {
        let n = 2 * h;
        let mut pairing = vec![usize::MAX; n];
        let mut set = |a: usize, b: usize| {
            pairing[a] = b;
            pairing[b] = a;
        };
        let mut k = 0;
        while k < order.len() {
            let i = order[k];
            let (pair_with_next, cross) = flags[k];
            if pair_with_next && k + 1 < order.len() {
                let j = order[k + 1];
                if cross {
                    set(i, j + h);
                    set(i + h, j);
                } else {
                    set(i, j);
                    set(i + h, j + h);
                }
                k += 2;
            } else {
                set(i, i + h);
                k += 1;
            }
        }
        GluingPattern { n_arcs: n, pairing, rotation_shift: h }
    })
}

#[test]
fn shipped_patterns_have_expected_topology_and_spectra() {
    for rho in 2..=8usize {
        let e = 2 * rho as u32;
        let expected_f = IntPolynomial::linear_power(1, e);
        let expected_g = IntPolynomial::linear_power(1, e - 2).mul(&IntPolynomial::linear_power(-1, 2));
        for (p, expected) in [(f_pattern(rho).unwrap(), expected_f), (g_pattern(rho).unwrap(), expected_g)] {
            let r = analyze(&p).unwrap();
            assert_eq!((r.genus, r.boundary_count, r.h1_rank), (rho, 1, 2 * rho));
            let m = induced_h1(&p).unwrap();
            assert!(m.mul(&m).unwrap().is_identity());
            assert_eq!(m.determinant().unwrap().abs(), 1);
            assert_eq!(char_poly(&m).unwrap(), expected);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn random_patterns_satisfy_euler_and_involution(p in half_turn_pattern()) {
        p.validate().unwrap();
        let r = analyze(&p).unwrap();
        prop_assert_eq!(r.vertex_classes as i64 - r.edges as i64, 2 - 2 * r.genus as i64 - r.boundary_count as i64);
        let m = induced_h1(&p).unwrap();
        prop_assert_eq!(m.nrows(), r.h1_rank);
        prop_assert!(m.mul(&m).unwrap().is_identity());
        prop_assert_eq!(m.determinant().unwrap().abs(), 1);
    }
}
