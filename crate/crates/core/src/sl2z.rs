//! Exact arithmetic in SL2(Z): orders, trace classes, m-th roots and
//! torsion conjugacy labels.
//!
//! Twist convention: `tau_a = [[1,1],[0,1]]`, `tau_b = [[1,0],[-1,1]]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::fmt;

use crate::error::{Error, Result};
use crate::json::{big_to_value, value_to_big};
use crate::poly::IntPolynomial;

/// A 2x2 integer matrix of determinant 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sl2Matrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Sl2Matrix {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        if &a * &d - &b * &c != BigInt::one() {
            return Err(Error::InvalidInput(format!(
                "determinant of [[{a},{b}],[{c},{d}]] is not 1"
            )));
        }
        Ok(Self { a, b, c, d })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    fn raw(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        debug_assert!(&a * &d - &b * &c == BigInt::one());
        Self { a, b, c, d }
    }

    fn small(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::raw(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Self::small(1, 0, 0, 1)
    }

    pub fn neg_identity() -> Self {
        Self::small(-1, 0, 0, -1)
    }

    /// Right-handed twist about `a`.
    pub fn tau_a() -> Self {
        Self::small(1, 1, 0, 1)
    }

    /// Right-handed twist about `b`.
    pub fn tau_b() -> Self {
        Self::small(1, 0, -1, 1)
    }

    /// `alpha = tau_a tau_b`, of order 6.
    pub fn alpha() -> Self {
        Self::tau_a().mul(&Self::tau_b())
    }

    /// `beta = tau_a tau_b tau_a`, of order 4.
    pub fn beta() -> Self {
        Self::alpha().mul(&Self::tau_a())
    }

    /// `delta = (tau_a tau_b)^3 = -I`.
    pub fn delta() -> Self {
        Self::alpha().pow(3)
    }

    /// `S = [[0,-1],[1,0]]`.
    pub fn s() -> Self {
        Self::small(0, -1, 1, 0)
    }

    /// `T = [[1,1],[0,1]]`.
    pub fn t() -> Self {
        Self::small(1, 1, 0, 1)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.entries().into_iter().map(Signed::abs).max().unwrap_or_default()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn is_central(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::raw(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }

    pub fn neg(&self) -> Self {
        Self::raw(-&self.a, -&self.b, -&self.c, -&self.d)
    }

    pub fn inverse(&self) -> Self {
        Self::raw(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    /// Power by repeated squaring.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Signed power; negative exponents use the inverse.
    pub fn pow_signed(&self, e: i64) -> Self {
        if e >= 0 {
            self.pow(e as u64)
        } else {
            self.inverse().pow(e.unsigned_abs())
        }
    }

    /// Power by `m` successive multiplications (oracle path).
    pub fn pow_naive(&self, m: u64) -> Self {
        let mut acc = Self::identity();
        for _ in 0..m {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.mul(self).mul(&g.inverse())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(vec![
            Value::Array(vec![big_to_value(&self.a), big_to_value(&self.b)]),
            Value::Array(vec![big_to_value(&self.c), big_to_value(&self.d)]),
        ])
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::InvalidInput("matrix must have the form [[a,b],[c,d]]".into());
        let rows = v.as_array().filter(|r| r.len() == 2).ok_or_else(bad)?;
        let mut e = Vec::with_capacity(4);
        for row in rows {
            let row = row.as_array().filter(|r| r.len() == 2).ok_or_else(bad)?;
            for x in row {
                e.push(value_to_big(x)?);
            }
        }
        let mut it = e.into_iter();
        let (a, b, c, d) = (it.next(), it.next(), it.next(), it.next());
        Self::new(a.ok_or_else(bad)?, b.ok_or_else(bad)?, c.ok_or_else(bad)?, d.ok_or_else(bad)?)
    }
}

impl fmt::Display for Sl2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl Serialize for Sl2Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Sl2Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        Self::from_json(&v).map_err(serde::de::Error::custom)
    }
}

/// Order of a group element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::Infinite => write!(f, "infinite"),
        }
    }
}

/// Smallest `k >= 1` with `M^k = I`. Finite orders in SL2(Z) lie in {1,2,3,4,6}.
pub fn element_order(m: &Sl2Matrix) -> Order {
    let mut acc = m.clone();
    for k in 1..=6 {
        if acc.is_identity() {
            return Order::Finite(k);
        }
        acc = acc.mul(m);
    }
    Order::Infinite
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TraceClass {
    /// `sign * I`.
    Central(i8),
    Elliptic,
    Parabolic,
    Hyperbolic,
}

impl fmt::Display for TraceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceClass::Central(1) => write!(f, "central(+I)"),
            TraceClass::Central(_) => write!(f, "central(-I)"),
            TraceClass::Elliptic => write!(f, "elliptic"),
            TraceClass::Parabolic => write!(f, "parabolic"),
            TraceClass::Hyperbolic => write!(f, "hyperbolic"),
        }
    }
}

pub fn trace_classify(m: &Sl2Matrix) -> TraceClass {
    if m.is_central() {
        return TraceClass::Central(if m.a.is_positive() { 1 } else { -1 });
    }
    let t = m.trace().abs();
    if t <= BigInt::one() {
        TraceClass::Elliptic
    } else if t == BigInt::from(2) {
        TraceClass::Parabolic
    } else {
        TraceClass::Hyperbolic
    }
}

/// Conjugacy classes of torsion elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TorsionLabel {
    Id,
    Delta,
    Alpha,
    AlphaInv,
    AlphaSq,
    AlphaSqInv,
    Beta,
    BetaInv,
}

impl TorsionLabel {
    pub const ALL: [TorsionLabel; 8] = [
        TorsionLabel::Id,
        TorsionLabel::Delta,
        TorsionLabel::Alpha,
        TorsionLabel::AlphaInv,
        TorsionLabel::AlphaSq,
        TorsionLabel::AlphaSqInv,
        TorsionLabel::Beta,
        TorsionLabel::BetaInv,
    ];

    pub fn order(self) -> u32 {
        match self {
            TorsionLabel::Id => 1,
            TorsionLabel::Delta => 2,
            TorsionLabel::Alpha | TorsionLabel::AlphaInv => 6,
            TorsionLabel::AlphaSq | TorsionLabel::AlphaSqInv => 3,
            TorsionLabel::Beta | TorsionLabel::BetaInv => 4,
        }
    }

    pub fn representative(self) -> Sl2Matrix {
        let alpha = Sl2Matrix::alpha();
        match self {
            TorsionLabel::Id => Sl2Matrix::identity(),
            TorsionLabel::Delta => Sl2Matrix::delta(),
            TorsionLabel::Alpha => alpha,
            TorsionLabel::AlphaInv => alpha.inverse(),
            TorsionLabel::AlphaSq => alpha.pow(2),
            TorsionLabel::AlphaSqInv => alpha.pow(2).inverse(),
            TorsionLabel::Beta => Sl2Matrix::beta(),
            TorsionLabel::BetaInv => Sl2Matrix::beta().inverse(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TorsionLabel::Id => "Id",
            TorsionLabel::Delta => "Delta",
            TorsionLabel::Alpha => "Alpha",
            TorsionLabel::AlphaInv => "AlphaInv",
            TorsionLabel::AlphaSq => "AlphaSq",
            TorsionLabel::AlphaSqInv => "AlphaSqInv",
            TorsionLabel::Beta => "Beta",
            TorsionLabel::BetaInv => "BetaInv",
        }
    }
}

impl fmt::Display for TorsionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of an m-th root query.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RootSet {
    /// The complete set of roots.
    Finite { roots: Vec<Sl2Matrix> },
    /// Conjugacy-class representatives of an infinite root family.
    TorsionFamily { representatives: Vec<TorsionLabel> },
}

/// `(p_{m-1}, p_m)` with `p_0 = 0`, `p_1 = 1`, `p_{k+1} = t p_k - p_{k-1}`.
/// For any `R` of trace `t`: `R^m = p_m(t) R - p_{m-1}(t) I`.
pub fn trace_polynomials(m: u32) -> Result<(IntPolynomial, IntPolynomial)> {
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    let x = IntPolynomial::x();
    let mut prev = IntPolynomial::zero();
    let mut cur = IntPolynomial::constant(1);
    for _ in 1..m {
        let next = x.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    Ok((prev, cur))
}

/// `(p_{m-1}(t), p_m(t))` evaluated by the recurrence.
fn trace_values(m: u32, t: &BigInt) -> (BigInt, BigInt) {
    let mut prev = BigInt::zero();
    let mut cur = BigInt::one();
    for _ in 1..m {
        let next = t * &cur - &prev;
        prev = cur;
        cur = next;
    }
    (prev, cur)
}

/// `q_m(t) = t p_m(t) - 2 p_{m-1}(t)`, the trace of `R^m` when `tr R = t`.
fn q_value(m: u32, t: &BigInt) -> BigInt {
    let (pm1, pm) = trace_values(m, t);
    t * pm - pm1 * 2
}

/// Integer roots of `q_m(t) = target`, all within the Cauchy bound.
fn integer_trace_solutions(m: u32, target: &BigInt) -> Result<Vec<BigInt>> {
    let (pm1, pm) = trace_polynomials(m)?;
    let q = IntPolynomial::x().mul(&pm).sub(&pm1.scale(&BigInt::from(2)));
    let shifted = q.sub(&IntPolynomial::constant(target.clone()));
    let bound = BigInt::one()
        + shifted.coeffs().iter().map(Signed::abs).max().unwrap_or_default();

    let mut out: Vec<BigInt> = (-1i64..=1)
        .map(BigInt::from)
        .filter(|t| &q_value(m, t) == target)
        .collect();
    // q_m is strictly increasing on [2, inf) and q_m(-t) = (-1)^m q_m(t).
    let sign_flip = m % 2 == 1;
    for (goal, negate) in [(target.clone(), false), (if sign_flip { -target } else { target.clone() }, true)] {
        if let Some(t) = monotone_search(m, &goal, &bound) {
            out.push(if negate { -t } else { t });
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Binary search for `t` in `[2, hi]` with `q_m(t) = goal`.
fn monotone_search(m: u32, goal: &BigInt, hi: &BigInt) -> Option<BigInt> {
    let two = BigInt::from(2);
    if goal < &two || hi < &two {
        return None;
    }
    let (mut lo, mut hi) = (two, hi.clone());
    while lo <= hi {
        let mid: BigInt = (&lo + &hi) >> 1;
        let v = q_value(m, &mid);
        match v.cmp(goal) {
            std::cmp::Ordering::Equal => return Some(mid),
            std::cmp::Ordering::Less => lo = mid + 1,
            std::cmp::Ordering::Greater => hi = mid - 1,
        }
    }
    None
}

/// All `R` in SL2(Z) with `R^m = M`.
///
/// Non-central targets give the complete finite set. Central targets with
/// `m >= 2` give the torsion classes whose representative satisfies the
/// equation; each stands for an infinite conjugation family.
pub fn mth_roots(m_target: &Sl2Matrix, m: u32) -> Result<RootSet> {
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    if m == 1 {
        return Ok(RootSet::Finite { roots: vec![m_target.clone()] });
    }
    if m_target.is_central() {
        let representatives = TorsionLabel::ALL
            .into_iter()
            .filter(|l| l.representative().pow(u64::from(m)) == *m_target)
            .collect();
        return Ok(RootSet::TorsionFamily { representatives });
    }
    let mut roots = Vec::new();
    for t in integer_trace_solutions(m, &m_target.trace())? {
        let (pm1, pm) = trace_values(m, &t);
        if pm.is_zero() {
            continue;
        }
        let num = [
            m_target.a() + &pm1,
            m_target.b().clone(),
            m_target.c().clone(),
            m_target.d() + &pm1,
        ];
        if num.iter().any(|x| !x.is_multiple_of(&pm)) {
            continue;
        }
        let [a, b, c, d] = num.map(|x| x / &pm);
        let Ok(r) = Sl2Matrix::new(a, b, c, d) else { continue };
        if r.trace() == t && r.pow(u64::from(m)) == *m_target {
            roots.push(r);
        }
    }
    roots.sort();
    roots.dedup();
    Ok(RootSet::Finite { roots })
}

/// Conjugacy label of a finite-order element.
///
/// The binary form `Q_M = c x^2 + (d-a) x y - b y^2` is definite for elliptic
/// `M`; its sign (the sign of `c`) together with the order separates the
/// classes. The sign dictionary is read off the eight representatives.
pub fn torsion_class(m: &Sl2Matrix) -> Result<TorsionLabel> {
    let order = match element_order(m) {
        Order::Finite(k) => k,
        Order::Infinite => return Err(Error::InfiniteOrder),
    };
    let sign = m.c().signum();
    TorsionLabel::ALL
        .into_iter()
        .find(|l| {
            let rep = l.representative();
            l.order() == order && (order <= 2 || rep.c().signum() == sign)
        })
        .ok_or_else(|| Error::InvalidInput(format!("no torsion class for {m}")))
}

fn in_box(x: &BigInt, bound: &BigInt) -> bool {
    x.abs() <= *bound
}

/// All `R` with `max|entry| <= bound` and `R^m = M`, by exhaustive search.
///
/// Every root commutes with `M`. For non-central `M` the box is enumerated
/// inside the centralizer `{d I + k (M - s I)/g}`, `g = gcd(b, c, a - d)`,
/// which contains every box candidate that could satisfy the equation; for
/// central `M` the whole box is walked with `d` solved from the determinant.
/// Each survivor is checked by `m` successive multiplications.
pub fn brute_force_roots(m_target: &Sl2Matrix, m: u32, bound: u64) -> Vec<Sl2Matrix> {
    let bound = BigInt::from(bound);
    let mut out = if m_target.is_central() {
        central_box_candidates(&bound)
    } else {
        centralizer_box_candidates(m_target, &bound)
    };
    out.retain(|r| r.pow_naive(u64::from(m)) == *m_target);
    out.sort();
    out.dedup();
    out
}

fn central_box_candidates(bound: &BigInt) -> Vec<Sl2Matrix> {
    let b = i64::try_from(bound).unwrap_or(i64::MAX);
    let mut out = Vec::new();
    for a in -b..=b {
        for bb in -b..=b {
            for c in -b..=b {
                if a != 0 {
                    let num = 1 + bb * c;
                    if num % a == 0 && (num / a).abs() <= b {
                        out.push(Sl2Matrix::small(a, bb, c, num / a));
                    }
                } else if bb * c == -1 {
                    for d in -b..=b {
                        out.push(Sl2Matrix::small(0, bb, c, d));
                    }
                }
            }
        }
    }
    out
}

fn centralizer_box_candidates(m: &Sl2Matrix, bound: &BigInt) -> Vec<Sl2Matrix> {
    let g = m.b().gcd(m.c()).gcd(&(m.a() - m.d()));
    let u = (m.a() - m.d()) / &g;
    let v = m.b() / &g;
    let w = m.c() / &g;
    let kmax = {
        let vw = v.abs().max(w.abs());
        if vw.is_zero() {
            (bound * 2) / u.abs()
        } else {
            bound / vw
        }
    };
    let mut out = Vec::new();
    let mut k = -kmax.clone();
    while k <= kmax {
        // det(d I + k N) = d^2 + k u d - k^2 v w = 1
        let ku = &k * &u;
        let disc: BigInt = &ku * &ku + (&k * &k * &v * &w + 1) * 4;
        if !disc.is_negative() {
            let s = disc.sqrt();
            if &s * &s == disc {
                let candidates: [BigInt; 2] = [&s - &ku, -&s - &ku];
                for root in candidates {
                    if root.is_even() {
                        let d: BigInt = root / 2;
                        let r = [&d + &ku, &k * &v, &k * &w, d.clone()];
                        if r.iter().all(|x| in_box(x, bound)) {
                            let [a, b, c, d] = r;
                            if let Ok(r) = Sl2Matrix::new(a, b, c, d) {
                                out.push(r);
                            }
                        }
                    }
                }
            }
        }
        k += 1;
    }
    out
}

/// Literal quartic box search; only practical for small bounds.
pub fn exhaustive_box_roots(m_target: &Sl2Matrix, m: u32, bound: i64) -> Vec<Sl2Matrix> {
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                for d in -bound..=bound {
                    if a * d - b * c != 1 {
                        continue;
                    }
                    let r = Sl2Matrix::small(a, b, c, d);
                    if r.pow_naive(u64::from(m)) == *m_target {
                        out.push(r);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(a: i64, b: i64, c: i64, d: i64) -> Sl2Matrix {
        Sl2Matrix::from_i64(a, b, c, d).unwrap()
    }

    #[test]
    fn rejects_bad_determinant() {
        assert!(Sl2Matrix::from_i64(1, 1, 1, 1).is_err());
    }

    #[test]
    fn named_elements() {
        assert_eq!(Sl2Matrix::alpha(), mat(0, 1, -1, 1));
        assert_eq!(Sl2Matrix::beta(), mat(0, 1, -1, 0));
        assert_eq!(Sl2Matrix::delta(), Sl2Matrix::neg_identity());
    }

    #[test]
    fn orders() {
        assert_eq!(element_order(&mat(0, 1, -1, 1)), Order::Finite(6));
        assert_eq!(element_order(&mat(1, 1, 0, 1)), Order::Infinite);
        assert_eq!(element_order(&Sl2Matrix::neg_identity()), Order::Finite(2));
        for l in TorsionLabel::ALL {
            assert_eq!(element_order(&l.representative()), Order::Finite(l.order()));
        }
    }

    #[test]
    fn classify() {
        assert_eq!(trace_classify(&mat(2, 1, 1, 1)), TraceClass::Hyperbolic);
        assert_eq!(trace_classify(&mat(1, 1, 0, 1)), TraceClass::Parabolic);
        assert_eq!(trace_classify(&mat(0, 1, -1, 0)), TraceClass::Elliptic);
        assert_eq!(trace_classify(&Sl2Matrix::neg_identity()), TraceClass::Central(-1));
        assert_eq!(trace_classify(&mat(-1, 1, 0, -1)), TraceClass::Parabolic);
    }

    #[test]
    fn trace_polynomial_values() {
        let (p1, p2) = trace_polynomials(2).unwrap();
        assert_eq!(p1, IntPolynomial::constant(1));
        assert_eq!(p2, IntPolynomial::x());
        let (p2, p3) = trace_polynomials(3).unwrap();
        assert_eq!(p2, IntPolynomial::x());
        assert_eq!(p3, IntPolynomial::from_i64(&[-1, 0, 1]));
        let r = mat(1, 1, 0, 1);
        let t = r.trace();
        let (pm1, pm) = (p2.eval(&t), p3.eval(&t));
        let lhs = r.pow(3);
        assert_eq!(lhs, mat(1, 3, 0, 1));
        assert_eq!(*lhs.a(), &pm * r.a() - &pm1);
        assert_eq!(*lhs.b(), &pm * r.b());
        assert!(trace_polynomials(0).is_err());
    }

    #[test]
    fn roots_of_parabolic() {
        let m = mat(1, 2, 0, 1);
        let expected = vec![mat(-1, -1, 0, -1), mat(1, 1, 0, 1)];
        assert_eq!(mth_roots(&m, 2).unwrap(), RootSet::Finite { roots: expected.clone() });
        assert_eq!(brute_force_roots(&m, 2, 3), expected);
        assert_eq!(exhaustive_box_roots(&m, 2, 3), expected);
    }

    #[test]
    fn hyperbolic_without_square_root() {
        let m = mat(2, 1, 1, 1);
        assert_eq!(mth_roots(&m, 2).unwrap(), RootSet::Finite { roots: vec![] });
        assert!(exhaustive_box_roots(&m, 2, 5).is_empty());
        assert!(brute_force_roots(&m, 2, 5).is_empty());
    }

    #[test]
    fn central_targets() {
        let minus = Sl2Matrix::neg_identity();
        assert_eq!(mth_roots(&minus, 1).unwrap(), RootSet::Finite { roots: vec![minus.clone()] });
        use TorsionLabel::*;
        assert_eq!(
            mth_roots(&Sl2Matrix::identity(), 6).unwrap(),
            RootSet::TorsionFamily {
                representatives: vec![Id, Delta, Alpha, AlphaInv, AlphaSq, AlphaSqInv]
            }
        );
        assert_eq!(
            mth_roots(&minus, 2).unwrap(),
            RootSet::TorsionFamily { representatives: vec![Beta, BetaInv] }
        );
        assert!(mth_roots(&minus, 0).is_err());
    }

    #[test]
    fn brute_force_central_examples() {
        assert_eq!(brute_force_roots(&Sl2Matrix::identity(), 1, 1), vec![Sl2Matrix::identity()]);
        let mut expected = vec![mat(0, 1, -1, 0), mat(0, -1, 1, 0)];
        expected.sort();
        assert_eq!(brute_force_roots(&Sl2Matrix::neg_identity(), 2, 1), expected);
        assert_eq!(exhaustive_box_roots(&Sl2Matrix::neg_identity(), 2, 1), expected);
    }

    #[test]
    fn centralizer_search_matches_literal_box() {
        for (a, b, c, d) in [(1, 2, 0, 1), (2, 1, 1, 1), (5, 2, 2, 1), (-1, 3, 0, -1), (1, 0, 4, 1)] {
            let m = mat(a, b, c, d);
            for e in 1..=3 {
                let target = m.pow(e);
                let bound = 4;
                assert_eq!(
                    brute_force_roots(&target, e as u32, bound as u64),
                    exhaustive_box_roots(&target, e as u32, bound),
                    "{target} m={e}"
                );
            }
        }
    }

    #[test]
    fn torsion_labels() {
        assert_eq!(torsion_class(&mat(0, 1, -1, 0)).unwrap(), TorsionLabel::Beta);
        assert_eq!(torsion_class(&Sl2Matrix::neg_identity()).unwrap(), TorsionLabel::Delta);
        let conj = Sl2Matrix::alpha().conjugate_by(&Sl2Matrix::t());
        assert_eq!(torsion_class(&conj).unwrap(), TorsionLabel::Alpha);
        for l in TorsionLabel::ALL {
            assert_eq!(torsion_class(&l.representative()).unwrap(), l);
        }
        assert_eq!(torsion_class(&mat(2, 1, 1, 1)), Err(Error::InfiniteOrder));
    }

    #[test]
    fn json_round_trip() {
        let m = mat(2, 1, 1, 1);
        let v = m.to_json();
        assert_eq!(v.to_string(), "[[2,1],[1,1]]");
        assert_eq!(Sl2Matrix::from_json(&v).unwrap(), m);
    }
}
