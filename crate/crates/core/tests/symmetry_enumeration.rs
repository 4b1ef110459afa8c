use mcg_core::symmetry::{
    claimed_order_rho_plus_one, claimed_rs_centralizer, rs_order_two_centralizer, FixedPointRule,
};
use mcg_core::{SymElement, SymGroup};

fn groups(max_n: u32) -> Vec<SymGroup> {
    (1..=max_n).flat_map(|n| [SymGroup::Dihedral(n), SymGroup::DihedralTimesC2(n)]).collect()
}

#[test]
fn group_axioms_by_enumeration() {
    for g in groups(24).into_iter().filter(|g| g.order() <= 48) {
        let els = g.elements();
        assert_eq!(els.len(), g.order(), "{g}");
        let e = SymElement::IDENTITY;
        for x in &els {
            assert_eq!(g.multiply(x, &e).unwrap(), *x);
            assert_eq!(g.multiply(&e, x).unwrap(), *x);
            assert_eq!(g.multiply(x, &g.inverse(x)).unwrap(), e);
            let ord = g.elem_order(x).unwrap() as usize;
            assert_eq!(g.order() % ord, 0, "{g}: order of {x}");
            for y in &els {
                let xy = g.multiply(x, y).unwrap();
                assert!(els.contains(&xy));
                for z in &els {
                    assert_eq!(g.multiply(&xy, z).unwrap(), g.multiply(x, &g.multiply(y, z).unwrap()).unwrap());
                }
            }
        }
    }
}

#[test]
fn fixed_points_are_conjugation_invariant() {
    let rules = (2..=16)
        .map(|rho| FixedPointRule::first_family(rho).unwrap())
        .chain([4, 8, 12, 16].map(|rho| FixedPointRule::second_family(rho).unwrap()));
    for rule in rules {
        let g = rule.group();
        for x in g.elements() {
            let Ok(fx) = rule.fixed_points(&x) else { continue };
            for h in g.elements() {
                assert_eq!(rule.fixed_points(&g.conjugate(&x, &h)).unwrap(), fx, "{rule:?} {x} by {h}");
            }
        }
    }
}

#[test]
fn order_rho_plus_one_elements_match_the_bullets() {
    for rho in 2..=10 {
        assert_eq!(SymGroup::DihedralTimesC2(rho + 1).elements_of_order(rho + 1), claimed_order_rho_plus_one(rho));
    }
}

/// The claimed list `{RS, R^((rho-2)/2) S, R^(rho/2)}` is not the order-2
/// centralizer of RS: `R^k S` commutes with `RS` iff `2(k-1) = 0 mod rho`,
/// giving `R^((rho+2)/2) S`. Both exponents are odd, so the two-fixed-point
/// conclusion drawn from the list is unaffected.
#[test]
fn rs_centralizer_by_enumeration() {
    for rho in [4u32, 8, 12, 16] {
        let mut expected = vec![SymElement::r(rho / 2), SymElement::rs(1), SymElement::rs((rho + 2) / 2)];
        expected.sort_by_key(|x| (x.t, x.s, x.k));
        assert_eq!(rs_order_two_centralizer(rho), expected);
        assert_ne!(claimed_rs_centralizer(rho), expected, "rho={rho}");
        assert_eq!((rho - 2) / 2 % 2, 1);
        assert_eq!((rho + 2) / 2 % 2, 1);
        let rule = FixedPointRule::second_family(rho).unwrap();
        for x in &expected {
            assert_eq!(rule.fixed_points(x).unwrap(), mcg_core::symmetry::FixedCount::Finite(2));
        }
    }
}
