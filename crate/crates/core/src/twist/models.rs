//! Curve data for the shipped models.

use super::polygon::{Crossing, Polygon};

/// Named curve on a polygon model.
#[derive(Debug, Clone)]
pub(crate) struct CurveSpec {
    pub name: String,
    pub crossings: Vec<Crossing>,
    pub is_boundary: bool,
}

const NEAR_START: i64 = 50;
const CENTER: i64 = 500;
const NEAR_END: i64 = 950;

/// Curves on a torus with `q` holes: `a_i` crosses `h_{i-1}` (cyclically),
/// `b` crosses `v`, and `c_i` encircles hole `i`.
pub(crate) fn torus_curves(poly: &Polygon) -> Vec<CurveSpec> {
    let q = poly.q();
    let v = poly.v();
    let h = |i: usize| poly.h(i);
    let mut out = Vec::new();
    for i in 1..=q {
        let prev = if i == 1 { q } else { i - 1 };
        let name = if q == 1 { "a".to_string() } else { format!("a{i}") };
        out.push(CurveSpec { name, crossings: vec![Crossing::new(h(prev), 1, CENTER)], is_boundary: false });
    }
    out.push(CurveSpec { name: "b".into(), crossings: vec![Crossing::new(v, 1, CENTER)], is_boundary: false });
    out.push(CurveSpec {
        name: "c1".into(),
        crossings: vec![
            Crossing::new(v, -1, NEAR_START),
            Crossing::new(h(q), 1, NEAR_END),
            Crossing::new(v, 1, NEAR_END),
            Crossing::new(h(1), -1, NEAR_START),
        ],
        is_boundary: true,
    });
    for i in 2..=q {
        out.push(CurveSpec {
            name: format!("c{i}"),
            crossings: vec![Crossing::new(h(i - 1), 1, NEAR_END), Crossing::new(h(i), -1, NEAR_START)],
            is_boundary: true,
        });
    }
    out
}
