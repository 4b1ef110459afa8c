//! Catalogued bordered surfaces with certified Dehn twist automorphisms.
//!
//! Bordered models act on the free group on `q+1` loops at a basepoint on
//! the first boundary circle together with `q-1` arcs joining it to the
//! other boundary circles. The arcs make twists about the other boundary
//! circles visible: on loops alone they act trivially. Twist words are
//! evaluated with the left factor applied last.

mod models;
mod polygon;

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::free_group::{CertifiedAuto, FreeEndo, FreeWord};
use crate::matrix::IntMatrix;
use crate::sl2z::Sl2Matrix;

use polygon::Polygon;

/// Maximum twist-word length accepted by `evaluate`.
pub const MAX_WORD_LEN: usize = 64;
/// Maximum absolute exponent accepted by `evaluate`.
pub const MAX_EXPONENT: i32 = 16;

pub const MODEL_NAMES: [&str; 5] =
    ["torus_closed_h1only", "genus1_q1", "genus1_q2", "genus1_q3", "genus1_q4"];

/// How a twist acts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwistAction {
    /// Automorphism of the free fundamental groupoid.
    Free(CertifiedAuto),
    /// Homology action only, with its inverse.
    Homology { forward: IntMatrix, backward: IntMatrix },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveDatum {
    pub name: String,
    pub twist: TwistAction,
    pub is_boundary: bool,
}

/// A word in Dehn twists, serialized as `[["a1",1],["b",-1],...]`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TwistWord(pub Vec<(String, i32)>);

impl TwistWord {
    pub fn new(letters: &[(&str, i32)]) -> Self {
        Self(letters.iter().map(|&(n, e)| (n.to_string(), e)).collect())
    }

    pub fn power(&self, k: usize) -> Self {
        Self(self.0.iter().cloned().cycle().take(self.0.len() * k).collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|(n, e)| (n.clone(), -e)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses the display form (`t_a1 t_b^-1`), with the `t_` prefix
    /// optional, or the JSON form `[["a1",1],["b",-1]]`. `1` is the empty word.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('[') {
            return serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("twist word JSON: {e}")));
        }
        if text == "1" || text.is_empty() {
            return Ok(Self::default());
        }
        text.split_whitespace()
            .map(|tok| {
                let body = tok.strip_prefix("t_").unwrap_or(tok);
                let (name, exp) = match body.split_once('^') {
                    Some((n, e)) => {
                        let e = e.parse::<i32>().map_err(|_| Error::InvalidInput(format!("bad exponent in `{tok}`")))?;
                        (n, e)
                    }
                    None => (body, 1),
                };
                if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric()) {
                    return Err(Error::InvalidInput(format!("bad twist letter `{tok}`")));
                }
                Ok((name.to_string(), exp))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (n, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *e == 1 {
                write!(f, "t_{n}")?;
            } else {
                write!(f, "t_{n}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct SurfaceModel {
    pub name: String,
    pub genus: u32,
    pub boundary_count: u32,
    /// Rank of the fundamental group, `2 genus + boundary_count - 1`.
    pub pi1_rank: usize,
    /// Extra free letters for arcs between boundary circles.
    pub arc_count: usize,
    pub curves: Vec<CurveDatum>,
    pub boundary_words: Vec<FreeWord>,
    pub intersection: BTreeMap<(String, String), u32>,
    pub homology_class: BTreeMap<String, Vec<i64>>,
    /// Antisymmetric form on the loop generators.
    pub intersection_form: IntMatrix,
}

impl SurfaceModel {
    /// Rank of the free group the twists act on.
    pub fn free_rank(&self) -> usize {
        self.pi1_rank + self.arc_count
    }

    pub fn is_homology_only(&self) -> bool {
        self.curves.iter().any(|c| matches!(c.twist, TwistAction::Homology { .. }))
    }

    pub fn curve(&self, name: &str) -> Result<&CurveDatum> {
        self.curves.iter().find(|c| c.name == name).ok_or_else(|| Error::UnknownCurve {
            model: self.name.clone(),
            curve: name.to_string(),
        })
    }

    pub fn curve_names(&self) -> Vec<&str> {
        self.curves.iter().map(|c| c.name.as_str()).collect()
    }

    pub fn intersection(&self, x: &str, y: &str) -> Option<u32> {
        if x == y {
            return self.curves.iter().any(|c| c.name == x).then_some(0);
        }
        let key = if x < y { (x.to_string(), y.to_string()) } else { (y.to_string(), x.to_string()) };
        self.intersection.get(&key).copied()
    }

    /// Algebraic intersection of two homology classes.
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        let fy = self.intersection_form.mul_vec(y);
        x.iter().zip(&fy).map(|(a, b)| a * b).sum()
    }

    fn validate_word(&self, w: &TwistWord) -> Result<()> {
        if w.len() > MAX_WORD_LEN {
            return Err(Error::Precondition(format!(
                "twist word has {} letters; the limit is {MAX_WORD_LEN}",
                w.len()
            )));
        }
        for (name, e) in &w.0 {
            self.curve(name)?;
            if *e == 0 || e.abs() > MAX_EXPONENT {
                return Err(Error::Precondition(format!(
                    "exponent {e} on `{name}` must be nonzero with |e| <= {MAX_EXPONENT}"
                )));
            }
        }
        Ok(())
    }
}

/// Looks up a shipped model by name.
pub fn model(name: &str) -> Result<SurfaceModel> {
    match name {
        "torus_closed_h1only" => Ok(closed_torus()),
        "genus1_q1" => Ok(bordered_torus(1)),
        "genus1_q2" => Ok(bordered_torus(2)),
        "genus1_q3" => Ok(bordered_torus(3)),
        "genus1_q4" => Ok(bordered_torus(4)),
        other => Err(Error::UnknownModel(other.to_string())),
    }
}

fn sl2_to_int(m: &Sl2Matrix) -> IntMatrix {
    let e: Vec<i64> = m.entries().iter().map(|x| i64::try_from(*x).expect("small entry")).collect();
    IntMatrix::from_rows(vec![vec![e[0], e[1]], vec![e[2], e[3]]]).expect("2x2")
}

fn closed_torus() -> SurfaceModel {
    let mk = |name: &str, m: Sl2Matrix| CurveDatum {
        name: name.into(),
        twist: TwistAction::Homology { forward: sl2_to_int(&m), backward: sl2_to_int(&m.inverse()) },
        is_boundary: false,
    };
    let mut intersection = BTreeMap::new();
    intersection.insert(("a".to_string(), "b".to_string()), 1);
    let mut homology_class = BTreeMap::new();
    homology_class.insert("a".to_string(), vec![1, 0]);
    homology_class.insert("b".to_string(), vec![0, 1]);
    SurfaceModel {
        name: "torus_closed_h1only".into(),
        genus: 1,
        boundary_count: 0,
        pi1_rank: 2,
        arc_count: 0,
        curves: vec![mk("a", Sl2Matrix::tau_a()), mk("b", Sl2Matrix::tau_b())],
        boundary_words: Vec::new(),
        intersection,
        homology_class,
        intersection_form: IntMatrix::from_rows(vec![vec![0, 1], vec![-1, 0]]).expect("2x2"),
    }
}

fn bordered_torus(q: usize) -> SurfaceModel {
    let poly = Polygon::torus_with_holes(q);
    let specs = models::torus_curves(&poly);
    let rank = poly.rank();
    let loop_rank = poly.loop_rank();

    let mut curves = Vec::new();
    let mut homology_class = BTreeMap::new();
    for s in &specs {
        let forward = FreeEndo::from_words(rank, poly.twist_images(&s.crossings, 1));
        let backward = FreeEndo::from_words(rank, poly.twist_images(&s.crossings, -1));
        let auto = CertifiedAuto::new(forward, backward)
            .unwrap_or_else(|_| panic!("twist about {} failed its inverse check", s.name));
        curves.push(CurveDatum { name: s.name.clone(), twist: TwistAction::Free(auto), is_boundary: s.is_boundary });
        let word = FreeWord::reduce_unchecked(poly.letters(&s.crossings));
        homology_class.insert(s.name.clone(), word.exponent_sums(loop_rank));
    }

    let mut intersection = BTreeMap::new();
    for (i, x) in specs.iter().enumerate() {
        for y in &specs[i + 1..] {
            let key = if x.name < y.name { (x.name.clone(), y.name.clone()) } else { (y.name.clone(), x.name.clone()) };
            intersection.insert(key, poly.intersection_count(&x.crossings, &y.crossings));
        }
    }

    let boundary: Vec<_> = specs.iter().filter(|s| s.is_boundary).map(|s| s.crossings.clone()).collect();
    SurfaceModel {
        name: format!("genus1_q{q}"),
        genus: 1,
        boundary_count: q as u32,
        pi1_rank: loop_rank,
        arc_count: q - 1,
        curves,
        boundary_words: poly.boundary_words(&boundary),
        intersection,
        homology_class,
        intersection_form: IntMatrix::from_rows(poly.intersection_form()).expect("square"),
    }
}

/// Signed algebraic intersection of a catalogued curve with each loop
/// generator, read directly off the polygon (independent of the form).
pub fn generator_pairings(model: &SurfaceModel, curve: &str) -> Result<Vec<i64>> {
    model.curve(curve)?;
    let q = model.boundary_count as usize;
    if model.is_homology_only() {
        let class = &model.homology_class[curve];
        return Ok((0..model.pi1_rank)
            .map(|j| {
                let mut e = vec![0; model.pi1_rank];
                e[j] = 1;
                model.pairing(class, &e)
            })
            .collect());
    }
    let poly = Polygon::torus_with_holes(q);
    let spec = models::torus_curves(&poly).into_iter().find(|s| s.name == curve).expect("curve present");
    Ok(poly.pairing_with_generators(&spec.crossings))
}

/// Composite automorphism of a twist word; left factor applied last.
pub fn evaluate(model: &SurfaceModel, w: &TwistWord) -> Result<FreeEndo> {
    model.validate_word(w)?;
    if model.is_homology_only() {
        return Err(Error::HomologyOnlyModel(model.name.clone()));
    }
    let mut acc = FreeEndo::identity(model.free_rank());
    for (name, e) in &w.0 {
        let TwistAction::Free(auto) = &model.curve(name)?.twist else { unreachable!() };
        let step = if *e > 0 { auto.forward() } else { auto.backward() };
        for _ in 0..e.unsigned_abs() {
            acc = acc.compose(step)?;
        }
    }
    Ok(acc)
}

/// Action on the first homology of the surface (loop generators).
pub fn h1_matrix(model: &SurfaceModel, w: &TwistWord) -> Result<IntMatrix> {
    model.validate_word(w)?;
    let n = model.pi1_rank;
    let mut acc = IntMatrix::identity(n);
    for (name, e) in &w.0 {
        let step = single_h1(model, name, e.signum())?;
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&step)?;
        }
    }
    Ok(acc)
}

fn single_h1(model: &SurfaceModel, name: &str, sign: i32) -> Result<IntMatrix> {
    Ok(match &model.curve(name)?.twist {
        TwistAction::Homology { forward, backward } => {
            if sign > 0 { forward.clone() } else { backward.clone() }
        }
        TwistAction::Free(auto) => {
            let e = if sign > 0 { auto.forward() } else { auto.backward() };
            let full = e.abelianization();
            let n = model.pi1_rank;
            IntMatrix::from_rows(full.rows()[..n].iter().map(|r| r[..n].to_vec()).collect())?
        }
    })
}

/// Action on the genus summand `H_1 / radical`, in the basis `([a], [b])`.
pub fn genus_summand_matrix(model: &SurfaceModel, w: &TwistWord) -> Result<IntMatrix> {
    let a_name = if model.curve("a").is_ok() { "a" } else { "a1" };
    let a = model.homology_class[a_name].clone();
    let b = model.homology_class["b"].clone();
    let m = h1_matrix(model, w)?;
    let coords = |x: &[i64]| [model.pairing(x, &b), model.pairing(&a, x)];
    let ia = coords(&m.mul_vec(&a));
    let ib = coords(&m.mul_vec(&b));
    IntMatrix::from_rows(vec![vec![ia[0], ib[0]], vec![ia[1], ib[1]]])
}

/// Exact equality of the two sides, after a homology pre-check.
pub fn verify_relation(model: &SurfaceModel, lhs: &TwistWord, rhs: &TwistWord) -> Result<bool> {
    if h1_matrix(model, lhs)? != h1_matrix(model, rhs)? {
        return Ok(false);
    }
    if model.is_homology_only() {
        return Ok(true);
    }
    evaluate(model, lhs)?.equal(&evaluate(model, rhs)?)
}

/// A named relation between twist words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub id: &'static str,
    pub model: &'static str,
    pub lhs: TwistWord,
    pub rhs: TwistWord,
    pub statement: &'static str,
}

fn boundary_product(q: usize) -> TwistWord {
    TwistWord((1..=q).map(|i| (format!("c{i}"), 1)).collect())
}

/// `g0 = t_a1 t_a2 t_a3 t_b` on the torus with three holes.
pub fn g0() -> TwistWord {
    TwistWord::new(&[("a1", 1), ("a2", 1), ("a3", 1), ("b", 1)])
}

/// `f0 = t_a1 t_b t_a2 t_b t_a3 t_b` on the torus with three holes.
pub fn f0_q3() -> TwistWord {
    TwistWord::new(&[("a1", 1), ("b", 1), ("a2", 1), ("b", 1), ("a3", 1), ("b", 1)])
}

/// `f0 = t_a1 t_a3 t_b t_a2 t_a4 t_b` on the torus with four holes.
pub fn f0_q4() -> TwistWord {
    TwistWord::new(&[("a1", 1), ("a3", 1), ("b", 1), ("a2", 1), ("a4", 1), ("b", 1)])
}

pub fn relations() -> Vec<Relation> {
    vec![
        Relation {
            id: "lemma7.9.star",
            model: "genus1_q3",
            lhs: g0().power(3),
            rhs: boundary_product(3),
            statement: "(t_a1 t_a2 t_a3 t_b)^3 = t_c1 t_c2 t_c3",
        },
        Relation {
            id: "lemma7.9.chain",
            model: "genus1_q3",
            lhs: f0_q3().power(2),
            rhs: boundary_product(3),
            statement: "(t_a1 t_b t_a2 t_b t_a3 t_b)^2 = t_c1 t_c2 t_c3",
        },
        Relation {
            id: "lemma7.10",
            model: "genus1_q4",
            lhs: f0_q4().power(2),
            rhs: boundary_product(4),
            statement: "(t_a1 t_a3 t_b t_a2 t_a4 t_b)^2 = t_c1 t_c2 t_c3 t_c4",
        },
        Relation {
            id: "q1.chain",
            model: "genus1_q1",
            lhs: TwistWord::new(&[("a", 1), ("b", 1)]).power(6),
            rhs: boundary_product(1),
            statement: "(t_a t_b)^6 = t_c1",
        },
        Relation {
            id: "q2.chain",
            model: "genus1_q2",
            lhs: TwistWord::new(&[("a1", 1), ("a2", 1), ("b", 1)]).power(4),
            rhs: boundary_product(2),
            statement: "(t_a1 t_a2 t_b)^4 = t_c1 t_c2",
        },
        Relation {
            id: "torus.order6",
            model: "torus_closed_h1only",
            lhs: TwistWord::new(&[("a", 1), ("b", 1)]).power(6),
            rhs: TwistWord::default(),
            statement: "(t_a t_b)^6 = 1 on the closed torus",
        },
    ]
}

pub fn relation(id: &str) -> Result<Relation> {
    relations().into_iter().find(|r| r.id == id).ok_or_else(|| Error::UnknownRelation(id.to_string()))
}

/// Evaluates a named relation on its model.
pub fn verify_named(id: &str) -> Result<bool> {
    let r = relation(id)?;
    verify_relation(&model(r.model)?, &r.lhs, &r.rhs)
}

/// The certification clauses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Clause {
    #[serde(rename = "i")]
    DisjointCommute,
    #[serde(rename = "ii")]
    BraidRelation,
    #[serde(rename = "iii")]
    BoundaryCentral,
    #[serde(rename = "iv")]
    BoundaryWordsFixed,
    #[serde(rename = "v")]
    Transvection,
    #[serde(rename = "vi")]
    InverseCheck,
}

impl Clause {
    pub const ALL: [Clause; 6] = [
        Clause::DisjointCommute,
        Clause::BraidRelation,
        Clause::BoundaryCentral,
        Clause::BoundaryWordsFixed,
        Clause::Transvection,
        Clause::InverseCheck,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Clause::DisjointCommute => "(i) disjoint curves commute",
            Clause::BraidRelation => "(ii) once-crossing curves braid",
            Clause::BoundaryCentral => "(iii) boundary twists are central",
            Clause::BoundaryWordsFixed => "(iv) boundary words fixed exactly",
            Clause::Transvection => "(v) homology action is the transvection",
            Clause::InverseCheck => "(vi) inverses certified",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClauseResult {
    pub clause: Clause,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificationReport {
    pub model: String,
    pub clauses: Vec<ClauseResult>,
}

impl CertificationReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn clause(&self, c: Clause) -> &ClauseResult {
        self.clauses.iter().find(|r| r.clause == c).expect("every clause is reported")
    }

    pub fn failed_clauses(&self) -> Vec<Clause> {
        self.clauses.iter().filter(|c| !c.passed).map(|c| c.clause).collect()
    }
}

#[derive(Default)]
struct ClauseAcc {
    checks: usize,
    failures: Vec<String>,
}

impl ClauseAcc {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self, clause: Clause) -> ClauseResult {
        ClauseResult { clause, passed: self.failures.is_empty(), checks: self.checks, failures: self.failures }
    }
}

/// Runs the certification suite.
pub fn certify_model(model: &SurfaceModel) -> CertificationReport {
    let names = model.curve_names();
    let word = |n: &str| TwistWord::new(&[(n, 1)]);
    let same = |l: TwistWord, r: TwistWord| verify_relation(model, &l, &r).unwrap_or(false);

    let mut disjoint = ClauseAcc::default();
    let mut braid = ClauseAcc::default();
    for (i, x) in names.iter().enumerate() {
        for y in &names[i + 1..] {
            let xy = TwistWord::new(&[(x, 1), (y, 1)]);
            let yx = TwistWord::new(&[(y, 1), (x, 1)]);
            match model.intersection(x, y) {
                Some(0) => disjoint.check(same(xy, yx), || format!("t_{x} and t_{y} do not commute")),
                Some(1) => braid.check(
                    same(TwistWord::new(&[(x, 1), (y, 1), (x, 1)]), TwistWord::new(&[(y, 1), (x, 1), (y, 1)])),
                    || format!("t_{x} and t_{y} fail the braid relation"),
                ),
                _ => {}
            }
        }
    }

    let mut central = ClauseAcc::default();
    for c in model.curves.iter().filter(|c| c.is_boundary) {
        for y in &names {
            let l = TwistWord::new(&[(&c.name, 1), (y, 1)]);
            let r = TwistWord::new(&[(y, 1), (&c.name, 1)]);
            central.check(same(l, r), || format!("boundary twist t_{} does not commute with t_{y}", c.name));
        }
    }

    let mut fixed = ClauseAcc::default();
    for c in &model.curves {
        if let TwistAction::Free(auto) = &c.twist {
            for (i, bw) in model.boundary_words.iter().enumerate() {
                for (dir, e) in [("", auto.forward()), ("^-1", auto.backward())] {
                    let ok = e.apply(bw).map(|img| img == *bw).unwrap_or(false);
                    fixed.check(ok, || format!("t_{}{dir} moves boundary word {}", c.name, i + 1));
                }
            }
        }
    }

    let mut transvection = ClauseAcc::default();
    for c in &model.curves {
        let class = &model.homology_class[&c.name];
        let n = model.pi1_rank;
        let mut expected = IntMatrix::identity(n);
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            let k = model.pairing(class, &e);
            for (i, ci) in class.iter().enumerate() {
                expected.set(i, j, expected.get(i, j) + k * ci);
            }
        }
        let actual = h1_matrix(model, &word(&c.name));
        transvection.check(actual.as_ref() == Ok(&expected), || {
            format!("t_{} acts on homology as {:?}, expected {expected}", c.name, actual)
        });
    }

    let mut inverses = ClauseAcc::default();
    for c in &model.curves {
        let ok = match &c.twist {
            TwistAction::Free(auto) => auto.check(),
            TwistAction::Homology { forward, backward } => {
                forward.mul(backward).is_ok_and(|m| m.is_identity())
                    && backward.mul(forward).is_ok_and(|m| m.is_identity())
            }
        };
        inverses.check(ok, || format!("inverse of t_{} is not certified", c.name));
    }

    CertificationReport {
        model: model.name.clone(),
        clauses: vec![
            disjoint.finish(Clause::DisjointCommute),
            braid.finish(Clause::BraidRelation),
            central.finish(Clause::BoundaryCentral),
            fixed.finish(Clause::BoundaryWordsFixed),
            transvection.finish(Clause::Transvection),
            inverses.finish(Clause::InverseCheck),
        ],
    }
}

/// Exponents `(k x_i + k/o)` of the boundary-twist expression for the `k`-th
/// power of a periodic element of corked order `o` with twist offsets `xs`.
pub fn central_power_exponents(o: u64, xs: &[i64], k: u64) -> Result<Vec<i64>> {
    if o == 0 || k == 0 {
        return Err(Error::Precondition("order and power must be positive".into()));
    }
    if k % o != 0 {
        return Err(Error::Precondition(format!("{o} does not divide {k}")));
    }
    let (k, per) = (k as i64, (k / o) as i64);
    Ok(xs.iter().map(|x| k * x + per).collect())
}
