//! Euler characteristic bookkeeping for ramified coverings and singular
//! foliations, lifting exponents of permutation representations, and the
//! feasibility searches built on Riemann-Hurwitz.
//!
//! Every identity is checked in doubled-integer form.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::free_group::{FreeEndo, FreeWord};

/// `2 - 2 genus - boundary`.
pub fn euler_char(genus: u64, boundary: u64) -> i64 {
    2 - 2 * genus as i64 - boundary as i64
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityDatum {
    pub id: String,
    pub prongs: u32,
    #[serde(default)]
    pub is_puncture: bool,
}

impl SingularityDatum {
    pub fn new(id: impl Into<String>, prongs: u32) -> Self {
        Self { id: id.into(), prongs, is_puncture: false }
    }
}

/// `2 chi = sum (2 - prongs)`.
pub fn check_prong_formula(chi: i64, singularities: &[SingularityDatum]) -> bool {
    let total: i64 = singularities.iter().map(|s| 2 - i64::from(s.prongs)).sum();
    2 * chi == total
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchPoint {
    /// Number of preimages.
    pub o: u64,
    /// Ramification order.
    pub r: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverDatum {
    pub m: u64,
    pub chi_total: i64,
    pub chi_quotient: i64,
    pub branch: Vec<BranchPoint>,
}

impl CoverDatum {
    /// Builds branch data from ramification orders, with `o = m / r`.
    pub fn from_orders(m: u64, chi_total: i64, chi_quotient: i64, rs: &[u64]) -> Result<Self> {
        let branch = rs
            .iter()
            .map(|&r| {
                if r == 0 || m % r != 0 {
                    Err(Error::InvalidInput(format!("ramification order {r} does not divide {m}")))
                } else {
                    Ok(BranchPoint { o: m / r, r })
                }
            })
            .collect::<Result<_>>()?;
        let c = Self { m, chi_total, chi_quotient, branch };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            return Err(Error::InvalidInput("cover must have at least one sheet".into()));
        }
        for b in &self.branch {
            if b.o * b.r != self.m || b.r < 2 {
                return Err(Error::InvalidInput(format!(
                    "branch point (o={}, r={}) needs o*r = {} and r >= 2",
                    b.o, b.r, self.m
                )));
            }
        }
        Ok(())
    }
}

/// `chi + sum (m - o) = m chi_quotient`.
pub fn check_riemann_hurwitz(c: &CoverDatum) -> bool {
    let m = c.m as i64;
    let branching: i64 = c.branch.iter().map(|b| m - b.o as i64).sum();
    c.chi_total + branching == m * c.chi_quotient
}

/// Prong count upstairs: `ind_down * r`.
pub fn lift_index(ind_down: u64, r: u64) -> u64 {
    ind_down * r
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PivotPoint {
    pub ind: u64,
    pub r: u64,
}

/// A pivot is a 1-prong point whose lifted index `r` is matched by no other
/// point's `ind * r` (regular points included with `r = 1`).
pub fn is_pivot(points: &[PivotPoint], candidate: usize) -> Result<bool> {
    let c = points
        .get(candidate)
        .ok_or_else(|| Error::InvalidInput(format!("candidate index {candidate} out of range")))?;
    if c.ind != 1 {
        return Ok(false);
    }
    Ok(points.iter().enumerate().filter(|&(i, _)| i != candidate).all(|(_, p)| p.ind * p.r != c.r))
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Whether `target` is a non-negative combination of `coins`.
fn representable(target: u64, coins: &[u64]) -> bool {
    let t = target as usize;
    let mut reach = vec![false; t + 1];
    reach[0] = true;
    for v in 1..=t {
        reach[v] = coins.iter().any(|&c| c as usize <= v && reach[v - c as usize]);
    }
    reach[t]
}

/// Whether an order-`m` cyclic action on a closed genus-`genus` surface can
/// have at least `q` fixed points as far as Riemann-Hurwitz allows: some even
/// quotient Euler characteristic leaves a non-negative residual that splits
/// into branch contributions `m - m/r`, `r | m`, `r >= 2`.
pub fn order_is_admissible(genus: u64, q: u64, m: u64) -> bool {
    if m <= 1 {
        return m == 1;
    }
    let chi = euler_char(genus, 0);
    let (mi, qi) = (m as i64, q as i64);
    let coins: Vec<u64> = divisors(m).into_iter().filter(|&r| r >= 2).map(|r| m - m / r).collect();
    // The residual only shrinks as the quotient gets more complicated.
    let mut chi0 = 2i64;
    loop {
        let residual = mi * chi0 - chi - qi * (mi - 1);
        if residual < 0 {
            return false;
        }
        if representable(residual as u64, &coins) {
            return true;
        }
        chi0 -= 2;
    }
}

/// Largest order searched by `admissible_orders`: `4g + 2` for `g >= 1`
/// (the maximal order of a periodic map with a fixed point), 64 on the sphere.
pub fn default_order_cap(genus: u64) -> u64 {
    if genus == 0 {
        64
    } else {
        4 * genus + 2
    }
}

pub fn admissible_orders(genus: u64, q: u64) -> BTreeSet<u64> {
    admissible_orders_up_to(genus, q, default_order_cap(genus))
}

pub fn admissible_orders_up_to(genus: u64, q: u64, cap: u64) -> BTreeSet<u64> {
    (1..=cap).filter(|&m| order_is_admissible(genus, q, m)).collect()
}

/// Largest `q` such that an order-`m` map of the sphere can fix `q` points.
pub fn max_fixed_points_sphere(m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::Precondition(format!("m must be at least 2, got {m}")));
    }
    // q (m - 1) <= 2m - 2 bounds the search.
    let mut best = 0;
    let mut q = 0;
    while q * (m - 1) <= 2 * m + 2 {
        if order_is_admissible(0, q, m) {
            best = q;
        }
        q += 1;
    }
    Ok(best)
}

/// All `(k, s)` with `k, s >= 2` and `k s = n`.
pub fn cyclic_orbit_factorizations(n: u64) -> Vec<(u64, u64)> {
    (2..n).filter(|k| n % k == 0 && n / k >= 2).map(|k| (k, n / k)).collect()
}

/// A permutation representation of a free group; `perms[g][i]` is the image
/// of point `i + 1` under generator `g + 1` (1-based values).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PermRep {
    pub degree: usize,
    pub perms: Vec<Vec<usize>>,
}

impl PermRep {
    pub fn new(degree: usize, perms: Vec<Vec<usize>>) -> Result<Self> {
        let r = Self { degree, perms };
        r.validate()?;
        Ok(r)
    }

    pub fn validate(&self) -> Result<()> {
        if self.degree == 0 {
            return Err(Error::InvalidInput("degree must be positive".into()));
        }
        for p in &self.perms {
            let mut seen = vec![false; self.degree];
            if p.len() != self.degree {
                return Err(Error::InvalidInput(format!("permutation {p:?} has wrong length")));
            }
            for &x in p {
                if x == 0 || x > self.degree || std::mem::replace(&mut seen[x - 1], true) {
                    return Err(Error::InvalidInput(format!("{p:?} is not a permutation of 1..{}", self.degree)));
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.perms.len()
    }

    pub fn is_transitive(&self) -> bool {
        orbit_labels(self, 0).iter().all(Option::is_some)
    }

    /// Image of a word, reading letters left to right.
    fn word_image(&self, w: &FreeWord) -> Vec<usize> {
        let mut cur: Vec<usize> = (0..self.degree).collect();
        for &l in w.letters() {
            let p = &self.perms[l.unsigned_abs() as usize - 1];
            if l > 0 {
                for x in cur.iter_mut() {
                    *x = p[*x] - 1;
                }
            } else {
                let mut inv = vec![0; self.degree];
                for (i, &y) in p.iter().enumerate() {
                    inv[y - 1] = i;
                }
                for x in cur.iter_mut() {
                    *x = inv[*x];
                }
            }
        }
        cur.into_iter().map(|x| x + 1).collect()
    }

    /// `x -> self(phi(x))`.
    pub fn precompose(&self, phi: &FreeEndo) -> Result<Self> {
        if phi.rank() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: phi.rank() });
        }
        Ok(Self { degree: self.degree, perms: phi.images().iter().map(|w| self.word_image(w)).collect() })
    }
}

/// Parses a permutation in cycle notation such as `(1 2)(3 4 5)` or `()`.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (1..=degree).collect();
    let mut seen = HashSet::new();
    let body = text.trim();
    if !body.starts_with('(') || !body.ends_with(')') {
        return Err(Error::InvalidInput(format!("`{text}` is not in cycle notation")));
    }
    for cycle in body[1..body.len() - 1].split(")(") {
        let pts: Vec<usize> = cycle
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad point `{s}` in `{text}`"))))
            .collect::<Result<_>>()?;
        for &p in &pts {
            if p == 0 || p > degree || !seen.insert(p) {
                return Err(Error::InvalidInput(format!("point {p} invalid or repeated in `{text}`")));
            }
        }
        for (i, &p) in pts.iter().enumerate() {
            perm[p - 1] = pts[(i + 1) % pts.len()];
        }
    }
    Ok(perm)
}

fn orbit_labels(rep: &PermRep, start: usize) -> Vec<Option<usize>> {
    let mut label = vec![None; rep.degree];
    let mut queue = VecDeque::from([start]);
    label[start] = Some(0);
    let mut next = 1;
    while let Some(x) = queue.pop_front() {
        for p in &rep.perms {
            let y = p[x] - 1;
            if label[y].is_none() {
                label[y] = Some(next);
                next += 1;
                queue.push_back(y);
            }
        }
    }
    label
}

/// Relabeling-invariant form of a transitive representation: the least
/// BFS relabeling over all starting points.
fn canonical_form(rep: &PermRep) -> Vec<Vec<usize>> {
    (0..rep.degree)
        .map(|s| {
            let label: Vec<usize> = orbit_labels(rep, s).into_iter().map(|l| l.expect("transitive")).collect();
            let mut perms = vec![vec![0; rep.degree]; rep.rank()];
            for (g, p) in rep.perms.iter().enumerate() {
                for x in 0..rep.degree {
                    perms[g][label[x]] = label[p[x] - 1];
                }
            }
            perms
        })
        .min()
        .unwrap_or_default()
}

/// Exhaustive conjugator search through all permutations of the points.
fn equivalent_exhaustive(a: &PermRep, b: &PermRep) -> bool {
    let n = a.degree;
    let mut sigma: Vec<usize> = (0..n).collect();
    loop {
        let ok = a.perms.iter().zip(&b.perms).all(|(pa, pb)| (0..n).all(|x| sigma[pa[x] - 1] == pb[sigma[x]] - 1));
        if ok {
            return true;
        }
        if !next_permutation(&mut sigma) {
            return false;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Conjugacy of two representations by a permutation of the points.
pub fn reps_equivalent(a: &PermRep, b: &PermRep) -> Result<bool> {
    if a.degree != b.degree || a.rank() != b.rank() {
        return Ok(false);
    }
    if a.degree <= 8 {
        return Ok(equivalent_exhaustive(a, b));
    }
    if !a.is_transitive() || !b.is_transitive() {
        return Err(Error::Unsupported("equivalence above degree 8 needs transitive representations".into()));
    }
    Ok(canonical_form(a) == canonical_form(b))
}

/// Least `k <= cap` with `rep ∘ phi^k` equivalent to `rep`, or `None`.
pub fn lift_exponent(rep: &PermRep, phi: &FreeEndo, cap: u32) -> Result<Option<u32>> {
    rep.validate()?;
    if phi.rank() != rep.rank() {
        return Err(Error::RankMismatch { expected: rep.rank(), found: phi.rank() });
    }
    let mut cur = rep.clone();
    for k in 1..=cap {
        cur = cur.precompose(phi)?;
        if reps_equivalent(&cur, rep)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Branch data of the `D_2(rho+1) x C_2` construction over the sphere.
pub fn first_family_cover(rho: u64) -> Result<CoverDatum> {
    let n = rho + 1;
    CoverDatum::from_orders(4 * n, 2 - 2 * rho as i64, 2, &[n, 2, 2, 2])
}

/// Branch data of the `D_2rho` construction over the sphere.
pub fn second_family_cover(rho: u64) -> Result<CoverDatum> {
    CoverDatum::from_orders(2 * rho, 2 - 2 * rho as i64, 2, &[rho, 2, 2, 2, 2])
}

/// Quotient singularities: four 1-prong points.
pub fn first_family_sphere_singularities() -> Vec<SingularityDatum> {
    (0..4).map(|i| SingularityDatum::new(format!("P{i}"), 1)).collect()
}

/// Quotient singularities: five 1-prong points and one 3-prong point.
pub fn second_family_sphere_singularities() -> Vec<SingularityDatum> {
    let mut v: Vec<_> = (0..5).map(|i| SingularityDatum::new(format!("P{i}"), 1)).collect();
    v.push(SingularityDatum::new("P5", 3));
    v
}

/// Lifted singularities of the `D_2rho` construction: the two preimages of
/// the pivot have `rho` prongs and the `2 rho` preimages of the 3-prong point
/// keep 3 prongs; all other preimages are regular.
pub fn second_family_lifted_singularities(rho: u64) -> Result<(i64, Vec<SingularityDatum>)> {
    let cover = second_family_cover(rho)?;
    let quotient = second_family_sphere_singularities();
    let mut up = Vec::new();
    for (i, b) in cover.branch.iter().enumerate() {
        let prongs = lift_index(u64::from(quotient[i].prongs), b.r) as u32;
        if prongs != 2 {
            up.extend((0..b.o).map(|j| SingularityDatum::new(format!("P{i}.{j}"), prongs)));
        }
    }
    up.extend((0..cover.m).map(|j| SingularityDatum::new(format!("P5.{j}"), quotient[5].prongs)));
    Ok((cover.chi_total, up))
}

/// Pivot data `(points, candidate)` of the first construction.
pub fn first_family_pivot_data(rho: u64) -> (Vec<PivotPoint>, usize) {
    let mut pts = vec![PivotPoint { ind: 1, r: rho + 1 }];
    pts.extend([PivotPoint { ind: 1, r: 2 }; 3]);
    pts.push(PivotPoint { ind: 2, r: 1 });
    (pts, 0)
}

/// Pivot data `(points, candidate)` of the second construction.
pub fn second_family_pivot_data(rho: u64) -> (Vec<PivotPoint>, usize) {
    let mut pts = vec![PivotPoint { ind: 1, r: rho }];
    pts.extend([PivotPoint { ind: 1, r: 2 }; 4]);
    pts.push(PivotPoint { ind: 3, r: 1 });
    (pts, 0)
}

/// Multiplicities of prong counts, for reporting.
pub fn prong_histogram(s: &[SingularityDatum]) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for x in s {
        *h.entry(x.prongs).or_insert(0) += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_examples() {
        assert_eq!(euler_char(0, 0), 2);
        assert_eq!(euler_char(1, 0), 0);
        assert_eq!(euler_char(2, 1), -3);
    }

    #[test]
    fn prong_examples() {
        assert!(check_prong_formula(2, &first_family_sphere_singularities()));
        assert!(check_prong_formula(2, &second_family_sphere_singularities()));
        assert!(check_prong_formula(0, &[]));
        assert!(!check_prong_formula(2, &[SingularityDatum::new("x", 1)]));
    }

    #[test]
    fn riemann_hurwitz_examples() {
        let c = first_family_cover(2).unwrap();
        assert_eq!(c.branch.iter().map(|b| b.o).collect::<Vec<_>>(), vec![4, 6, 6, 6]);
        assert!(check_riemann_hurwitz(&c));
        let c = second_family_cover(4).unwrap();
        assert_eq!(c.branch.iter().map(|b| b.o).collect::<Vec<_>>(), vec![2, 4, 4, 4, 4]);
        assert!(check_riemann_hurwitz(&c));
        assert!(check_riemann_hurwitz(&CoverDatum { m: 2, chi_total: 0, chi_quotient: 0, branch: vec![] }));
        let bad = CoverDatum { m: 4, chi_total: 0, chi_quotient: 0, branch: vec![BranchPoint { o: 3, r: 2 }] };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn lifted_prongs() {
        for rho in [4, 8, 12] {
            let (chi, s) = second_family_lifted_singularities(rho).unwrap();
            assert_eq!(chi, 2 - 2 * rho as i64);
            let h = prong_histogram(&s);
            assert_eq!(h[&(rho as u32)], 2);
            assert_eq!(h[&3], 2 * rho as usize);
            assert!(check_prong_formula(chi, &s));
        }
    }

    #[test]
    fn pivots() {
        assert_eq!(lift_index(1, 4), 4);
        assert_eq!(lift_index(1, 2), 2);
        assert_eq!(lift_index(3, 1), 3);
        for rho in 2..=10 {
            let (pts, c) = first_family_pivot_data(rho);
            assert!(is_pivot(&pts, c).unwrap());
        }
        for rho in [4, 8, 12] {
            let (pts, c) = second_family_pivot_data(rho);
            assert!(is_pivot(&pts, c).unwrap());
        }
        let pts = [PivotPoint { ind: 2, r: 5 }, PivotPoint { ind: 1, r: 2 }];
        assert!(!is_pivot(&pts, 0).unwrap());
        assert!(is_pivot(&pts, 5).is_err());
        // rho + 1 = 2 collides with the order-2 points
        let (pts, c) = first_family_pivot_data(1);
        assert!(!is_pivot(&pts, c).unwrap());
    }

    #[test]
    fn admissible_tables() {
        let set = |v: &[u64]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(admissible_orders(1, 3), set(&[1, 2, 3]));
        assert_eq!(admissible_orders(1, 4), set(&[1, 2]));
        assert_eq!(admissible_orders(1, 5), set(&[1]));
        assert_eq!(admissible_orders(0, 3), set(&[1]));
        assert_eq!(admissible_orders(2, 7), set(&[1]));
        assert_eq!(admissible_orders(1, 1), set(&[1, 2, 3, 4, 6]));
    }

    #[test]
    fn sphere_bound() {
        for m in [2, 3, 7] {
            assert_eq!(max_fixed_points_sphere(m).unwrap(), 2);
        }
        assert!(max_fixed_points_sphere(1).is_err());
    }

    #[test]
    fn factorizations() {
        assert!(cyclic_orbit_factorizations(5).is_empty());
        assert_eq!(cyclic_orbit_factorizations(6), vec![(2, 3), (3, 2)]);
        assert_eq!(cyclic_orbit_factorizations(4), vec![(2, 2)]);
        assert!(cyclic_orbit_factorizations(1).is_empty());
    }

    #[test]
    fn lift_exponents() {
        let rep = PermRep::new(2, vec![vec![2, 1]]).unwrap();
        let inv = FreeEndo::new(1, vec![vec![-1]]).unwrap();
        assert_eq!(lift_exponent(&rep, &inv, 64).unwrap(), Some(1));
        let rep = PermRep::new(3, vec![vec![2, 3, 1], vec![1, 2, 3]]).unwrap();
        let swap = FreeEndo::new(2, vec![vec![2], vec![1]]).unwrap();
        assert_eq!(lift_exponent(&rep, &swap, 64).unwrap(), Some(2));
        assert_eq!(lift_exponent(&rep, &FreeEndo::identity(2), 64).unwrap(), Some(1));
        assert_eq!(lift_exponent(&rep, &swap, 1).unwrap(), None);
        assert!(lift_exponent(&rep, &inv, 4).is_err());
    }

    #[test]
    fn canonical_form_agrees_with_exhaustive() {
        let a = PermRep::new(5, vec![vec![2, 3, 4, 5, 1], vec![2, 1, 3, 4, 5]]).unwrap();
        let b = PermRep::new(5, vec![vec![3, 4, 5, 1, 2], vec![1, 2, 4, 3, 5]]).unwrap();
        assert_eq!(equivalent_exhaustive(&a, &b), canonical_form(&a) == canonical_form(&b));
        let c = PermRep::new(5, vec![vec![2, 3, 4, 5, 1], vec![1, 3, 2, 4, 5]]).unwrap();
        assert_eq!(equivalent_exhaustive(&a, &c), canonical_form(&a) == canonical_form(&c));
    }

    #[test]
    fn cycle_notation() {
        assert_eq!(parse_cycles("(1 2 3)", 4).unwrap(), vec![2, 3, 1, 4]);
        assert_eq!(parse_cycles("()", 2).unwrap(), vec![1, 2]);
        assert_eq!(parse_cycles("(1 2)(3 4)", 4).unwrap(), vec![2, 1, 4, 3]);
        assert!(parse_cycles("(1 1)", 2).is_err());
        assert!(parse_cycles("1 2", 2).is_err());
    }
}
