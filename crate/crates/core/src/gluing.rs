//! Quotient surfaces of an annulus whose outer circle is cut into arcs that
//! are glued in pairs, and the homology action of a rotation.
//!
//! The surface deformation-retracts onto the quotient graph of the outer
//! circle: arc `i` runs from point `i` to point `i+1`, and gluing arc `i` to
//! arc `j` identifies point `i` with `j+1` and point `i+1` with `j`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::poly::IntPolynomial;

pub use crate::poly::char_poly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingPattern {
    pub n_arcs: usize,
    pub pairing: Vec<usize>,
    pub rotation_shift: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientSurfaceReport {
    pub vertex_classes: usize,
    pub edges: usize,
    pub genus: usize,
    pub boundary_count: usize,
    pub h1_rank: usize,
}

impl GluingPattern {
    pub fn validate(&self) -> Result<()> {
        let n = self.n_arcs;
        if n == 0 || n % 2 != 0 {
            return Err(Error::InvalidInput(format!("n_arcs must be even and positive, got {n}")));
        }
        if self.pairing.len() != n {
            return Err(Error::InvalidInput(format!("pairing has {} entries, expected {n}", self.pairing.len())));
        }
        for (i, &j) in self.pairing.iter().enumerate() {
            if j >= n || j == i || self.pairing[j] != i {
                return Err(Error::InvalidInput(format!("pairing is not a fixed-point-free involution at arc {i}")));
            }
        }
        let s = self.rotation_shift % n;
        for i in 0..n {
            if self.pairing[(i + s) % n] != (self.pairing[i] + s) % n {
                return Err(Error::InvalidInput(format!("rotation by {s} does not preserve the pairing")));
            }
        }
        Ok(())
    }

    fn from_pairs(n: usize, pairs: &[(usize, usize)], shift: usize) -> Self {
        let mut pairing = vec![usize::MAX; n];
        for &(a, b) in pairs {
            pairing[a] = b;
            pairing[b] = a;
        }
        Self { n_arcs: n, pairing, rotation_shift: shift }
    }

    /// Pairs as `(representative, partner)` with the smaller index first.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n_arcs).filter(|&i| i < self.pairing[i]).map(|i| (i, self.pairing[i])).collect()
    }
}

/// Opposite arcs glued: `i <-> i + 2 rho` on `4 rho` arcs, rotated by a half turn.
pub fn f_pattern(rho: usize) -> Result<GluingPattern> {
    if rho < 2 {
        return Err(Error::Precondition(format!("rho must be at least 2, got {rho}")));
    }
    let n = 4 * rho;
    let pairs: Vec<_> = (0..2 * rho).map(|i| (i, i + 2 * rho)).collect();
    Ok(GluingPattern::from_pairs(n, &pairs, 2 * rho))
}

/// Opposite arcs glued except near each half: there two short arcs are glued
/// to their second neighbours (`2j rho - 4 <-> 2j rho - 2`, `2j rho - 3 <-> 2j rho - 1`).
pub fn g_pattern(rho: usize) -> Result<GluingPattern> {
    if rho < 2 {
        return Err(Error::Precondition(format!("rho must be at least 2, got {rho}")));
    }
    let n = 4 * rho;
    let mut pairs: Vec<_> = (0..2 * rho - 4).map(|i| (i, i + 2 * rho)).collect();
    for j in 1..=2 {
        let base = 2 * j * rho;
        pairs.push((base - 4, base - 2));
        pairs.push((base - 3, base - 1));
    }
    Ok(GluingPattern::from_pairs(n, &pairs, 2 * rho))
}

/// Parses `f:<rho>` or `g:<rho>`.
pub fn pattern_from_id(id: &str) -> Result<GluingPattern> {
    let (kind, rho) = id
        .split_once(':')
        .ok_or_else(|| Error::InvalidInput(format!("pattern id `{id}` is not of the form f:<rho> or g:<rho>")))?;
    let rho: usize = rho.trim().parse().map_err(|_| Error::InvalidInput(format!("bad rho in `{id}`")))?;
    match kind.trim() {
        "f" => f_pattern(rho),
        "g" => g_pattern(rho),
        other => Err(Error::InvalidInput(format!("unknown pattern family `{other}`"))),
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// The quotient graph: vertex class of every circle point, and one oriented
/// edge per pair.
struct QuotientGraph {
    vertex_of_point: Vec<usize>,
    vertex_count: usize,
    /// `(representative arc, tail vertex, head vertex)`.
    edges: Vec<(usize, usize, usize)>,
}

fn quotient_graph(p: &GluingPattern) -> Result<QuotientGraph> {
    p.validate()?;
    let n = p.n_arcs;
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        let j = p.pairing[i];
        uf.union(i, (j + 1) % n);
        uf.union((i + 1) % n, j);
    }
    let mut label = vec![usize::MAX; n];
    let mut vertex_of_point = vec![0; n];
    let mut count = 0;
    for i in 0..n {
        let r = uf.find(i);
        if label[r] == usize::MAX {
            label[r] = count;
            count += 1;
        }
        vertex_of_point[i] = label[r];
    }
    let edges = p
        .pairs()
        .into_iter()
        .map(|(r, _)| (r, vertex_of_point[r], vertex_of_point[(r + 1) % n]))
        .collect();
    Ok(QuotientGraph { vertex_of_point, vertex_count: count, edges })
}

pub fn analyze(p: &GluingPattern) -> Result<QuotientSurfaceReport> {
    let g = quotient_graph(p)?;
    let (v, e) = (g.vertex_count, g.edges.len());
    let h1_rank = e + 1 - v;
    if h1_rank % 2 != 0 {
        return Err(Error::InvalidInput("quotient has odd first Betti number with one boundary circle".into()));
    }
    Ok(QuotientSurfaceReport { vertex_classes: v, edges: e, genus: h1_rank / 2, boundary_count: 1, h1_rank })
}

/// Matrix of the rotation on `H_1`, in the basis of fundamental cycles of a
/// spanning tree of the quotient graph.
pub fn induced_h1(p: &GluingPattern) -> Result<IntMatrix> {
    let g = quotient_graph(p)?;
    let n = p.n_arcs;
    let e = g.edges.len();
    let edge_of_arc = |arc: usize| -> (usize, i64) {
        let rep = arc.min(p.pairing[arc]);
        let idx = g.edges.iter().position(|&(r, _, _)| r == rep).expect("pair present");
        (idx, if arc == rep { 1 } else { -1 })
    };
    // signed permutation on the chain group
    let shift = p.rotation_shift % n;
    let image: Vec<(usize, i64)> = g.edges.iter().map(|&(r, _, _)| edge_of_arc((r + shift) % n)).collect();

    // spanning tree by union-find in edge order
    let mut uf = UnionFind::new(g.vertex_count);
    let mut in_tree = vec![false; e];
    let mut adjacency: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); g.vertex_count];
    for (k, &(_, t, h)) in g.edges.iter().enumerate() {
        if uf.union(t, h) {
            in_tree[k] = true;
            adjacency[t].push((h, k, 1));
            adjacency[h].push((t, k, -1));
        }
    }
    let cotree: Vec<usize> = (0..e).filter(|&k| !in_tree[k]).collect();

    // tree path from the root (vertex of point 0) to each vertex, as chains
    let root = g.vertex_of_point[0];
    let mut path: Vec<Option<Vec<i64>>> = vec![None; g.vertex_count];
    path[root] = Some(vec![0; e]);
    let mut stack = vec![root];
    while let Some(x) = stack.pop() {
        for &(y, k, s) in &adjacency[x] {
            if path[y].is_none() {
                let mut c = path[x].clone().expect("visited");
                c[k] += s;
                path[y] = Some(c);
                stack.push(y);
            }
        }
    }
    if path.iter().any(Option::is_none) {
        return Err(Error::InvalidInput("quotient graph is disconnected".into()));
    }
    let cycle = |k: usize| -> Vec<i64> {
        let (_, t, h) = g.edges[k];
        let pt = path[t].as_ref().expect("connected");
        let ph = path[h].as_ref().expect("connected");
        let mut c: Vec<i64> = pt.iter().zip(ph).map(|(a, b)| a - b).collect();
        c[k] += 1;
        c
    };
    let r = cotree.len();
    let mut m = IntMatrix::zeros(r, r);
    for (col, &k) in cotree.iter().enumerate() {
        let z = cycle(k);
        let mut pz = vec![0i64; e];
        for (idx, &coef) in z.iter().enumerate() {
            if coef != 0 {
                let (to, sign) = image[idx];
                pz[to] += sign * coef;
            }
        }
        for (row, &k2) in cotree.iter().enumerate() {
            m.set(row, col, pz[k2]);
        }
    }
    Ok(m)
}

/// True iff the characteristic polynomials differ, which certifies that the
/// two actions are not conjugate.
pub fn conjugacy_obstruction(p1: &IntPolynomial, p2: &IntPolynomial) -> bool {
    p1 != p2
}
