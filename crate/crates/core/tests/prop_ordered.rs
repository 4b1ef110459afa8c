use mcg_core::ordered::unique_root_check;
use mcg_core::{LexExtension, OrderedGroup, ZqLex};
use proptest::prelude::*;
use std::cmp::Ordering;

fn zq_elem(q: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, q)
}

fn heis_elem() -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
    (zq_elem(2), zq_elem(1))
}

fn check_bi_invariance<G: OrderedGroup>(g: &G, f: &G::Elem, h: &G::Elem, l: &G::Elem, r: &G::Elem) -> Result<(), TestCaseError> {
    let before = g.compare(f, h);
    prop_assert_eq!(before, g.compare(h, f).reverse());
    prop_assert_eq!(before == Ordering::Equal, f == h);
    let after = g.compare(&g.mul(&g.mul(l, f), r), &g.mul(&g.mul(l, h), r));
    prop_assert_eq!(before, after);
    for m in 1..=10 {
        prop_assert!(unique_root_check(g, f, h, m));
        if before == Ordering::Less {
            prop_assert_eq!(g.compare(&g.pow(f, m), &g.pow(h, m)), Ordering::Less);
        }
    }
    // positive cone closed under products and conjugation
    if g.is_positive(f) && g.is_positive(h) {
        prop_assert!(g.is_positive(&g.mul(f, h)));
        prop_assert!(g.is_positive(&g.mul(&g.mul(l, f), &g.inverse(l))));
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn zq_lex_is_bi_ordered((f, h, l, r) in (1usize..=5).prop_flat_map(|q| (zq_elem(q), zq_elem(q), zq_elem(q), zq_elem(q)))) {
        check_bi_invariance(&ZqLex::new(f.len()), &f, &h, &l, &r)?;
    }

    #[test]
    fn heisenberg_extension_is_bi_ordered(f in heis_elem(), h in heis_elem(), l in heis_elem(), r in heis_elem()) {
        check_bi_invariance(&LexExtension::heisenberg(), &f, &h, &l, &r)?;
    }

    #[test]
    fn roots_are_unique_when_powers_agree(f in heis_elem(), m in 1u32..=6) {
        let g = LexExtension::heisenberg();
        let target = g.pow(&f, m);
        for h in [f.clone(), g.inverse(&f), g.mul(&f, &(vec![0, 0], vec![1]))] {
            prop_assert!(unique_root_check(&g, &h, &f, m));
            if g.pow(&h, m) == target {
                prop_assert_eq!(&h, &f);
            }
        }
    }
}

#[test]
fn direct_extension_breaks_ties_in_the_kernel() {
    let g = LexExtension::direct(ZqLex::new(1), 1);
    assert_eq!(g.compare(&(vec![0], vec![3]), &(vec![0], vec![-1])), Ordering::Greater);
    assert_eq!(g.compare(&(vec![-1], vec![9]), &(vec![0], vec![-9])), Ordering::Less);
}
