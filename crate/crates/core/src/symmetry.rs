//! Dihedral groups `D_2n` and `D_2n x C_2`, with the fixed-point bookkeeping
//! of the two symmetric constructions.
//!
//! Elements are `R^k S^s T^t` with `S R S = R^{-1}` and `T` central.

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymElement {
    pub k: u32,
    pub s: u8,
    pub t: u8,
}

impl SymElement {
    pub const IDENTITY: Self = Self { k: 0, s: 0, t: 0 };

    pub fn r(k: u32) -> Self {
        Self { k, s: 0, t: 0 }
    }

    pub fn rs(k: u32) -> Self {
        Self { k, s: 1, t: 0 }
    }

    pub fn rt(k: u32) -> Self {
        Self { k, s: 0, t: 1 }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }
}

impl fmt::Display for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.k {
            0 => {}
            1 => parts.push("R".to_string()),
            k => parts.push(format!("R^{k}")),
        }
        if self.s == 1 {
            parts.push("S".into());
        }
        if self.t == 1 {
            parts.push("T".into());
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SymGroup {
    Dihedral(u32),
    DihedralTimesC2(u32),
}

impl SymGroup {
    pub fn n(&self) -> u32 {
        match *self {
            SymGroup::Dihedral(n) | SymGroup::DihedralTimesC2(n) => n,
        }
    }

    pub fn has_t(&self) -> bool {
        matches!(self, SymGroup::DihedralTimesC2(_))
    }

    pub fn order(&self) -> usize {
        let base = 2 * self.n() as usize;
        if self.has_t() {
            2 * base
        } else {
            base
        }
    }

    /// Parses `D2n:<n>` or `D2nxC2:<n>`.
    pub fn parse(spec: &str) -> Result<Self> {
        let (kind, n) = spec
            .split_once(':')
            .ok_or_else(|| Error::InvalidInput(format!("group spec `{spec}` must be D2n:<n> or D2nxC2:<n>")))?;
        let n: u32 = n.trim().parse().map_err(|_| Error::InvalidInput(format!("bad n in `{spec}`")))?;
        if n == 0 {
            return Err(Error::InvalidInput("n must be positive".into()));
        }
        match kind.trim() {
            "D2n" => Ok(SymGroup::Dihedral(n)),
            "D2nxC2" => Ok(SymGroup::DihedralTimesC2(n)),
            other => Err(Error::InvalidInput(format!("unknown group family `{other}`"))),
        }
    }

    fn check(&self, x: &SymElement) -> Result<()> {
        if x.k >= self.n() || x.s > 1 || x.t > 1 || (x.t == 1 && !self.has_t()) {
            return Err(Error::InvalidInput(format!("{x} is not an element of {self}")));
        }
        Ok(())
    }

    fn mul_raw(&self, x: &SymElement, y: &SymElement) -> SymElement {
        let n = i64::from(self.n());
        let yk = if x.s == 1 { -i64::from(y.k) } else { i64::from(y.k) };
        SymElement { k: (i64::from(x.k) + yk).rem_euclid(n) as u32, s: x.s ^ y.s, t: x.t ^ y.t }
    }

    pub fn multiply(&self, x: &SymElement, y: &SymElement) -> Result<SymElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul_raw(x, y))
    }

    pub fn inverse(&self, x: &SymElement) -> SymElement {
        if x.s == 1 {
            *x
        } else {
            SymElement { k: (self.n() - x.k) % self.n(), s: 0, t: x.t }
        }
    }

    pub fn elements(&self) -> Vec<SymElement> {
        let ts: &[u8] = if self.has_t() { &[0, 1] } else { &[0] };
        let mut out = Vec::with_capacity(self.order());
        for &t in ts {
            for s in 0..=1 {
                for k in 0..self.n() {
                    out.push(SymElement { k, s, t });
                }
            }
        }
        out
    }

    pub fn elem_order(&self, x: &SymElement) -> Result<u32> {
        self.check(x)?;
        let mut acc = *x;
        let mut k = 1;
        while !acc.is_identity() {
            acc = self.mul_raw(&acc, x);
            k += 1;
        }
        Ok(k)
    }

    /// Exhaustive list, ordered by `(t, s, k)`.
    pub fn elements_of_order(&self, d: u32) -> Vec<SymElement> {
        self.elements().into_iter().filter(|x| self.elem_order(x).ok() == Some(d)).collect()
    }

    pub fn commutes(&self, x: &SymElement, y: &SymElement) -> Result<bool> {
        Ok(self.multiply(x, y)? == self.multiply(y, x)?)
    }

    pub fn centralizer(&self, x: &SymElement) -> Result<Vec<SymElement>> {
        self.check(x)?;
        Ok(self.elements().into_iter().filter(|g| self.mul_raw(g, x) == self.mul_raw(x, g)).collect())
    }

    pub fn conjugate(&self, x: &SymElement, g: &SymElement) -> SymElement {
        self.mul_raw(&self.mul_raw(g, x), &self.inverse(g))
    }

    pub fn conjugate_exists(&self, x: &SymElement, y: &SymElement) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.elements().iter().any(|g| self.conjugate(x, g) == *y))
    }

    /// Parses products of `R`, `R^k`, `S`, `T`, `1` joined by `*`.
    pub fn parse_element(&self, text: &str) -> Result<SymElement> {
        let mut acc = SymElement::IDENTITY;
        for tok in text.split('*').map(str::trim) {
            let x = match tok {
                "1" | "e" | "" => SymElement::IDENTITY,
                "R" => SymElement::r(1 % self.n()),
                "S" => SymElement { k: 0, s: 1, t: 0 },
                "T" if self.has_t() => SymElement { k: 0, s: 0, t: 1 },
                _ => {
                    let k = tok
                        .strip_prefix("R^")
                        .and_then(|e| e.parse::<i64>().ok())
                        .ok_or_else(|| Error::InvalidInput(format!("cannot parse element token `{tok}` for {self}")))?;
                    SymElement::r(k.rem_euclid(i64::from(self.n())) as u32)
                }
            };
            acc = self.mul_raw(&acc, &x);
        }
        Ok(acc)
    }
}

impl fmt::Display for SymGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymGroup::Dihedral(n) => write!(f, "D2n:{n}"),
            SymGroup::DihedralTimesC2(n) => write!(f, "D2nxC2:{n}"),
        }
    }
}

/// Number of fixed points on the surface; the identity fixes everything.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FixedCount {
    Finite(u32),
    Infinite,
}

impl fmt::Display for FixedCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedCount::Finite(k) => write!(f, "{k}"),
            FixedCount::Infinite => write!(f, "infinite"),
        }
    }
}

/// Fixed-point counts for the symmetry group of one of the two constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FixedPointRule {
    /// Surface of genus `rho` with symmetry `D_2(rho+1) x C_2`.
    Thm521 { rho: u32 },
    /// Surface of genus `rho` with symmetry `D_2rho`, `rho = 0 mod 4`.
    Thm522 { rho: u32 },
}

impl FixedPointRule {
    pub fn first_family(rho: u32) -> Result<Self> {
        if rho < 2 {
            return Err(Error::Precondition(format!("rho must be at least 2, got {rho}")));
        }
        Ok(Self::Thm521 { rho })
    }

    pub fn second_family(rho: u32) -> Result<Self> {
        if rho < 4 || rho % 4 != 0 {
            return Err(Error::Precondition(format!("rho must be a positive multiple of 4, got {rho}")));
        }
        Ok(Self::Thm522 { rho })
    }

    pub fn group(&self) -> SymGroup {
        match *self {
            FixedPointRule::Thm521 { rho } => SymGroup::DihedralTimesC2(rho + 1),
            FixedPointRule::Thm522 { rho } => SymGroup::Dihedral(rho),
        }
    }

    /// The stated counts. For the `D_2(rho+1) x C_2` construction only the
    /// rotations are fully determined (they fix the four face centres);
    /// other elements are rejected.
    pub fn fixed_points(&self, x: &SymElement) -> Result<FixedCount> {
        self.group().check(x)?;
        if x.is_identity() {
            return Ok(FixedCount::Infinite);
        }
        match self {
            FixedPointRule::Thm522 { .. } => Ok(FixedCount::Finite(match x.s {
                1 if x.k % 2 == 0 => 6,
                _ => 2,
            })),
            FixedPointRule::Thm521 { .. } => {
                if x.s == 0 && x.t == 0 {
                    Ok(FixedCount::Finite(4))
                } else {
                    Err(Error::Unsupported(format!("fixed points of {x} are not determined for this construction")))
                }
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub construction: String,
    pub rho: u32,
    pub checks: Vec<Check>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn fmt_set(xs: &[SymElement]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

/// The order-`(rho+1)` elements described by the three claimed bullets.
pub fn claimed_order_rho_plus_one(rho: u32) -> Vec<SymElement> {
    let n = rho + 1;
    let mut out: Vec<SymElement> = (1..n).filter(|k| k.gcd(&n) == 1).map(SymElement::r).collect();
    if n % 2 == 0 {
        out.extend((1..n).filter(|k| k.gcd(&n) == 1).map(SymElement::rt));
    }
    if n % 4 == 2 {
        out.extend((1..n).filter(|k| k.gcd(&(n / 2)) == 1).map(SymElement::rt));
    }
    out.sort_by_key(|x| (x.t, x.s, x.k));
    out.dedup();
    out
}

/// The claimed order-2 centralizer of `RS`: `{RS, R^((rho-2)/2) S, R^(rho/2)}`.
pub fn claimed_rs_centralizer(rho: u32) -> Vec<SymElement> {
    let mut out = vec![SymElement::rs(1), SymElement::rs((rho - 2) / 2), SymElement::r(rho / 2)];
    out.sort_by_key(|x| (x.t, x.s, x.k));
    out.dedup();
    out
}

/// Order-2 elements of `D_2rho` commuting with `RS`, by enumeration.
pub fn rs_order_two_centralizer(rho: u32) -> Vec<SymElement> {
    let g = SymGroup::Dihedral(rho);
    let rs = SymElement::rs(1);
    g.elements_of_order(2).into_iter().filter(|x| g.commutes(x, &rs).unwrap_or(false)).collect()
}

/// Group-theoretic core of the first construction.
pub fn verify_thm_5_2_1(rho: u32) -> Result<TheoremReport> {
    let rule = FixedPointRule::first_family(rho)?;
    let g = rule.group();
    let (r, s) = (SymElement::r(1), SymElement { k: 0, s: 1, t: 0 });
    let (or, os) = (g.elem_order(&r)?, g.elem_order(&s)?);
    let enumerated = g.elements_of_order(rho + 1);
    let claimed = claimed_order_rho_plus_one(rho);
    let commuting: Vec<SymElement> =
        enumerated.iter().copied().filter(|x| g.commutes(x, &s).unwrap_or(false)).collect();
    Ok(TheoremReport {
        construction: "thm5.2.1".into(),
        rho,
        checks: vec![
            Check {
                name: "orders_differ".into(),
                passed: or != os,
                detail: format!("order(R) = {or}, order(S) = {os}"),
            },
            Check {
                name: "order_rho_plus_one_matches_bullets".into(),
                passed: enumerated == claimed,
                detail: format!("enumerated {} vs claimed {}", fmt_set(&enumerated), fmt_set(&claimed)),
            },
            Check {
                name: "none_commutes_with_s".into(),
                passed: commuting.is_empty(),
                detail: format!("commuting with S: {}", fmt_set(&commuting)),
            },
            Check {
                name: "r_not_conjugate_to_s".into(),
                passed: !g.conjugate_exists(&r, &s)?,
                detail: "exhaustive conjugator search".into(),
            },
        ],
    })
}

/// Group-theoretic core of the second construction.
pub fn verify_thm_5_2_2(rho: u32) -> Result<TheoremReport> {
    let rule = FixedPointRule::second_family(rho)?;
    let g = rule.group();
    let s = SymElement { k: 0, s: 1, t: 0 };
    let rs = SymElement::rs(1);
    let fs = rule.fixed_points(&s)?;
    let frs = rule.fixed_points(&rs)?;
    let enumerated = rs_order_two_centralizer(rho);
    let claimed = claimed_rs_centralizer(rho);
    let counts: Vec<FixedCount> = enumerated.iter().map(|x| rule.fixed_points(x)).collect::<Result<_>>()?;
    let mut invariant = true;
    for x in g.elements() {
        for h in g.elements() {
            invariant &= rule.fixed_points(&g.conjugate(&x, &h))? == rule.fixed_points(&x)?;
        }
    }
    Ok(TheoremReport {
        construction: "thm5.2.2".into(),
        rho,
        checks: vec![
            Check {
                name: "fixed_points_separate_s_and_rs".into(),
                passed: fs == FixedCount::Finite(6) && frs == FixedCount::Finite(2),
                detail: format!("fix(S) = {fs}, fix(RS) = {frs}"),
            },
            Check {
                name: "rs_centralizer_has_two_fixed_points".into(),
                passed: counts.iter().all(|c| *c == FixedCount::Finite(2)),
                detail: format!("order-2 centralizer of RS: {}", fmt_set(&enumerated)),
            },
            Check {
                name: "rs_centralizer_matches_claimed_list".into(),
                passed: enumerated == claimed,
                detail: format!("enumerated {} vs claimed {}", fmt_set(&enumerated), fmt_set(&claimed)),
            },
            Check {
                name: "fixed_points_conjugation_invariant".into(),
                passed: invariant,
                detail: format!("all {} conjugations checked", g.order() * g.order()),
            },
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_products() {
        let g = SymGroup::DihedralTimesC2(5);
        assert_eq!(g.elem_order(&SymElement::r(1)).unwrap(), 5);
        assert_eq!(g.elem_order(&SymElement::rt(1)).unwrap(), 10);
        let d8 = SymGroup::Dihedral(4);
        let rs = d8.parse_element("R*S").unwrap();
        assert_eq!(rs, SymElement::rs(1));
        assert_eq!(d8.elem_order(&rs).unwrap(), 2);
        assert!(d8.multiply(&rs, &rs).unwrap().is_identity());
        assert_eq!(d8.parse_element("S*R").unwrap(), SymElement::rs(3));
        assert!(d8.parse_element("T").is_err());
    }

    #[test]
    fn order_lists() {
        let g = SymGroup::DihedralTimesC2(5);
        assert_eq!(g.elements_of_order(5), (1..5).map(SymElement::r).collect::<Vec<_>>());
        let g6 = SymGroup::DihedralTimesC2(6);
        let expected = vec![
            SymElement::r(1),
            SymElement::r(5),
            SymElement::rt(1),
            SymElement::rt(2),
            SymElement::rt(4),
            SymElement::rt(5),
        ];
        assert_eq!(g6.elements_of_order(6), expected);
        assert_eq!(claimed_order_rho_plus_one(5), expected);
        assert_eq!(g6.elements_of_order(1), vec![SymElement::IDENTITY]);
    }

    #[test]
    fn centralizers() {
        // rho = 4: the claimed list collapses to two members and misses R^3 S.
        assert_eq!(rs_order_two_centralizer(4), vec![SymElement::r(2), SymElement::rs(1), SymElement::rs(3)]);
        assert_eq!(claimed_rs_centralizer(4), vec![SymElement::r(2), SymElement::rs(1)]);
        // rho = 8: enumeration gives R^5 S, the claimed list has R^3 S.
        assert_eq!(rs_order_two_centralizer(8), vec![SymElement::r(4), SymElement::rs(1), SymElement::rs(5)]);
        assert_eq!(claimed_rs_centralizer(8), vec![SymElement::r(4), SymElement::rs(1), SymElement::rs(3)]);
        for rho in [4, 8, 12, 16] {
            let expected =
                vec![SymElement::r(rho / 2), SymElement::rs(1), SymElement::rs((rho + 2) / 2 % rho)];
            let mut expected = expected;
            expected.sort_by_key(|x| (x.t, x.s, x.k));
            expected.dedup();
            assert_eq!(rs_order_two_centralizer(rho), expected);
        }
        let d8 = SymGroup::Dihedral(4);
        assert!(d8.commutes(&SymElement::r(1), &SymElement::r(2)).unwrap());
    }

    #[test]
    fn conjugacy() {
        let g = SymGroup::DihedralTimesC2(5);
        let s = SymElement { k: 0, s: 1, t: 0 };
        assert!(!g.conjugate_exists(&SymElement::r(1), &s).unwrap());
        let d8 = SymGroup::Dihedral(4);
        assert!(d8.conjugate_exists(&s, &SymElement::rs(2)).unwrap());
        assert!(!d8.conjugate_exists(&s, &SymElement::rs(1)).unwrap());
    }

    #[test]
    fn fixed_point_rules() {
        let rule = FixedPointRule::second_family(4).unwrap();
        assert_eq!(rule.fixed_points(&SymElement { k: 0, s: 1, t: 0 }).unwrap(), FixedCount::Finite(6));
        assert_eq!(rule.fixed_points(&SymElement::rs(1)).unwrap(), FixedCount::Finite(2));
        assert_eq!(rule.fixed_points(&SymElement::r(2)).unwrap(), FixedCount::Finite(2));
        assert_eq!(rule.fixed_points(&SymElement::IDENTITY).unwrap(), FixedCount::Infinite);
        assert!(FixedPointRule::second_family(6).is_err());
        let r521 = FixedPointRule::first_family(3).unwrap();
        assert_eq!(r521.fixed_points(&SymElement::r(1)).unwrap(), FixedCount::Finite(4));
        assert!(matches!(r521.fixed_points(&SymElement::rs(0)), Err(Error::Unsupported(_))));
    }

    #[test]
    fn theorem_reports() {
        for rho in [2, 5] {
            assert!(verify_thm_5_2_1(rho).unwrap().passed());
        }
        for rho in [4, 8, 12] {
            let r = verify_thm_5_2_2(rho).unwrap();
            assert!(r.check("rs_centralizer_has_two_fixed_points").unwrap().passed);
            assert!(r.check("fixed_points_separate_s_and_rs").unwrap().passed);
            assert!(r.check("fixed_points_conjugation_invariant").unwrap().passed);
            assert!(!r.check("rs_centralizer_matches_claimed_list").unwrap().passed);
            assert!(!r.passed());
        }
        assert!(verify_thm_5_2_2(5).is_err());
    }

    #[test]
    fn group_spec_parsing() {
        assert_eq!(SymGroup::parse("D2n:4").unwrap(), SymGroup::Dihedral(4));
        assert_eq!(SymGroup::parse("D2nxC2:6").unwrap(), SymGroup::DihedralTimesC2(6));
        assert!(SymGroup::parse("C6:2").is_err());
        assert_eq!(SymElement::rs(3).to_string(), "R^3*S");
        assert_eq!(SymElement::IDENTITY.to_string(), "1");
    }
}
