//! Dual graphs of curve-system decompositions of a genus-1 bordered surface.
//!
//! Component vertices carry a genus label, boundary leaves are the boundary
//! circles, and edges are the decomposing curves.

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// Vertex or edge identifier; JSON numbers and strings are both accepted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub String);

impl NodeId {
    pub fn new(s: impl fmt::Display) -> Self {
        Self(s.to_string())
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for NodeId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for NodeId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::String(s) => Ok(Self(s)),
            serde_json::Value::Number(n) => Ok(Self(n.to_string())),
            other => Err(de::Error::custom(format!("id must be a number or string, got {other}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentVertex {
    pub id: NodeId,
    pub genus: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEdge {
    pub id: NodeId,
    pub ends: [NodeId; 2],
}

impl GraphEdge {
    pub fn is_loop(&self) -> bool {
        self.ends[0] == self.ends[1]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionGraph {
    pub components: Vec<ComponentVertex>,
    pub leaves: Vec<NodeId>,
    pub edges: Vec<GraphEdge>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CaseLabel {
    Case1,
    Case2,
    Case3,
    Case4,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Case1 => "Case1",
            Self::Case2 => "Case2",
            Self::Case3 => "Case3",
            Self::Case4 => "Case4",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub diagnostics: Vec<String>,
}

/// Incidence-preserving bijection fixing every leaf. `reversed_loops` lists
/// the self-loops (by source id) whose orientation is flipped.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphAutomorphism {
    pub vertex_map: BTreeMap<NodeId, NodeId>,
    pub edge_map: BTreeMap<NodeId, NodeId>,
    pub reversed_loops: BTreeSet<NodeId>,
}

impl GraphAutomorphism {
    pub fn is_vertex_identity(&self) -> bool {
        self.vertex_map.iter().all(|(a, b)| a == b)
    }

    pub fn is_identity(&self) -> bool {
        self.is_vertex_identity() && self.edge_map.iter().all(|(a, b)| a == b) && self.reversed_loops.is_empty()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let vertex_map = other.vertex_map.iter().map(|(a, b)| (a.clone(), self.vertex_map[b].clone())).collect();
        let edge_map = other.edge_map.iter().map(|(a, b)| (a.clone(), self.edge_map[b].clone())).collect();
        let mut reversed_loops = BTreeSet::new();
        for (e, img) in &other.edge_map {
            if other.reversed_loops.contains(e) != self.reversed_loops.contains(img) {
                reversed_loops.insert(e.clone());
            }
        }
        Self { vertex_map, edge_map, reversed_loops }
    }

    pub fn inverse(&self) -> Self {
        let edge_map: BTreeMap<NodeId, NodeId> = self.edge_map.iter().map(|(a, b)| (b.clone(), a.clone())).collect();
        let reversed_loops = self.reversed_loops.iter().map(|e| self.edge_map[e].clone()).collect();
        Self {
            vertex_map: self.vertex_map.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
            edge_map,
            reversed_loops,
        }
    }
}

pub const DEFAULT_GRAPH_BUDGET: usize = 12;

/// Index form used by the algorithms; vertices are components then leaves.
struct Indexed {
    n_comp: usize,
    genus: Vec<u8>,
    ids: Vec<NodeId>,
    edges: Vec<(usize, usize)>,
}

impl Indexed {
    fn n(&self) -> usize {
        self.ids.len()
    }

    fn valence(&self) -> Vec<usize> {
        let mut val = vec![0; self.n()];
        for &(a, b) in &self.edges {
            val[a] += 1;
            val[b] += 1;
        }
        val
    }

    fn connected(&self) -> bool {
        if self.n() == 0 {
            return false;
        }
        let mut adj = vec![Vec::new(); self.n()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !std::mem::replace(&mut seen[y], true) {
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

impl DecompositionGraph {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("graph JSON: {e}")))
    }

    pub fn vertex_count(&self) -> usize {
        self.components.len() + self.leaves.len()
    }

    fn index(&self) -> std::result::Result<Indexed, Vec<String>> {
        let mut diags = Vec::new();
        let mut pos: HashMap<&NodeId, usize> = HashMap::new();
        let ids: Vec<NodeId> =
            self.components.iter().map(|c| c.id.clone()).chain(self.leaves.iter().cloned()).collect();
        for (i, id) in ids.iter().enumerate() {
            if pos.insert(id, i).is_some() {
                diags.push(format!("duplicate vertex id {id}"));
            }
        }
        let mut edge_ids = BTreeSet::new();
        let mut edges = Vec::new();
        for e in &self.edges {
            if !edge_ids.insert(&e.id) {
                diags.push(format!("duplicate edge id {}", e.id));
            }
            match (pos.get(&e.ends[0]), pos.get(&e.ends[1])) {
                (Some(&a), Some(&b)) => edges.push((a, b)),
                _ => diags.push(format!("edge {} has an unknown endpoint", e.id)),
            }
        }
        for c in &self.components {
            if c.genus > 1 {
                diags.push(format!("component {} has genus {} (only 0 or 1 fit a genus-1 surface)", c.id, c.genus));
            }
        }
        if !diags.is_empty() {
            return Err(diags);
        }
        Ok(Indexed { n_comp: self.components.len(), genus: self.components.iter().map(|c| c.genus).collect(), ids, edges })
    }

    pub fn validate(&self) -> ValidationReport {
        let idx = match self.index() {
            Ok(i) => i,
            Err(diagnostics) => return ValidationReport { valid: false, diagnostics },
        };
        let mut diags = Vec::new();
        if self.components.is_empty() {
            diags.push("no component vertices".to_string());
        }
        if !idx.connected() {
            diags.push("graph is disconnected".to_string());
        }
        let val = idx.valence();
        for (i, v) in val.iter().enumerate() {
            if i >= idx.n_comp {
                if *v != 1 {
                    diags.push(format!("leaf {} has valence {v}, expected 1", idx.ids[i]));
                }
            } else if idx.genus[i] == 0 && *v < 3 {
                diags.push(format!("genus-0 component {} has valence {v} < 3", idx.ids[i]));
            }
        }
        let rank = idx.edges.len() as i64 - idx.n() as i64 + 1;
        let genus_sum: i64 = idx.genus.iter().map(|&g| i64::from(g)).sum();
        if rank >= 0 && genus_sum + rank != 1 {
            diags.push(format!("total genus {genus_sum} + cycle rank {rank} != 1"));
        }
        ValidationReport { valid: diags.is_empty(), diagnostics: diags }
    }

    fn checked(&self) -> Result<Indexed> {
        let report = self.validate();
        if !report.valid {
            return Err(Error::InvalidInput(format!("invalid graph: {}", report.diagnostics.join("; "))));
        }
        self.index().map_err(|d| Error::InvalidInput(d.join("; ")))
    }

    /// `edges - vertices + 1`.
    pub fn cycle_rank(&self) -> Result<u64> {
        let idx = self.checked()?;
        Ok((idx.edges.len() + 1 - idx.n()) as u64)
    }

    /// Length of the unique reduced cycle, after pruning pendant vertices.
    fn core_cycle_length(idx: &Indexed) -> usize {
        let mut alive = vec![true; idx.edges.len()];
        loop {
            let mut val = vec![0; idx.n()];
            for (k, &(a, b)) in idx.edges.iter().enumerate() {
                if alive[k] {
                    val[a] += 1;
                    val[b] += 1;
                }
            }
            let mut changed = false;
            for (k, &(a, b)) in idx.edges.iter().enumerate() {
                if alive[k] && a != b && (val[a] == 1 || val[b] == 1) {
                    alive[k] = false;
                    changed = true;
                }
            }
            if !changed {
                return alive.iter().filter(|&&x| x).count();
            }
        }
    }

    pub fn classify_case(&self) -> Result<CaseLabel> {
        let idx = self.checked()?;
        let rank = idx.edges.len() + 1 - idx.n();
        if idx.genus.contains(&1) {
            if rank != 0 {
                return Err(Error::InvalidInput(format!("genus-1 component with cycle rank {rank}")));
            }
            return Ok(CaseLabel::Case1);
        }
        if rank != 1 {
            return Err(Error::InvalidInput(format!("cycle rank {rank} without a genus-1 component")));
        }
        Ok(match Self::core_cycle_length(&idx) {
            1 => CaseLabel::Case2,
            2 => CaseLabel::Case3,
            _ => CaseLabel::Case4,
        })
    }

    pub fn leaf_fixing_automorphisms(&self) -> Result<Vec<GraphAutomorphism>> {
        self.leaf_fixing_automorphisms_within(DEFAULT_GRAPH_BUDGET)
    }

    /// Exhaustive search over vertex bijections fixing leaves and genus, then
    /// over bijections of each parallel class of edges and loop reversals.
    pub fn leaf_fixing_automorphisms_within(&self, budget: usize) -> Result<Vec<GraphAutomorphism>> {
        let idx = self.checked()?;
        if idx.n() > budget {
            return Err(Error::BudgetExceeded(format!("{} vertices exceed the budget of {budget}", idx.n())));
        }
        let n = idx.n();
        let mut mult = vec![vec![0usize; n]; n];
        for &(a, b) in &idx.edges {
            mult[a][b] += 1;
            if a != b {
                mult[b][a] += 1;
            }
        }
        let mut sigmas = Vec::new();
        let mut sigma: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for i in idx.n_comp..n {
            used[i] = true;
        }
        extend_vertex_map(&idx, &mult, 0, &mut sigma, &mut used, &mut sigmas);

        let mut out = Vec::new();
        for s in sigmas {
            // Group edges by unordered endpoint pair.
            let mut classes: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
            for (k, &(a, b)) in idx.edges.iter().enumerate() {
                classes.entry((a.min(b), a.max(b))).or_default().push(k);
            }
            let mut partial = vec![vec![0usize; idx.edges.len()]];
            for (&(a, b), src) in &classes {
                let (x, y) = (s[a], s[b]);
                let dst = &classes[&(x.min(y), x.max(y))];
                let mut next = Vec::new();
                for p in &partial {
                    for perm in permutations(dst.len()) {
                        let mut q = p.clone();
                        for (i, &e) in src.iter().enumerate() {
                            q[e] = dst[perm[i]];
                        }
                        next.push(q);
                    }
                }
                partial = next;
            }
            let loops: Vec<usize> = (0..idx.edges.len()).filter(|&k| idx.edges[k].0 == idx.edges[k].1).collect();
            for emap in partial {
                for mask in 0..(1u64 << loops.len()) {
                    let reversed_loops =
                        loops.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &k)| self.edges[k].id.clone()).collect();
                    out.push(GraphAutomorphism {
                        vertex_map: (0..n).map(|v| (idx.ids[v].clone(), idx.ids[s[v]].clone())).collect(),
                        edge_map: emap.iter().enumerate().map(|(k, &t)| (self.edges[k].id.clone(), self.edges[t].id.clone())).collect(),
                        reversed_loops,
                    });
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

fn extend_vertex_map(
    idx: &Indexed,
    mult: &[Vec<usize>],
    i: usize,
    sigma: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    if i == idx.n_comp {
        out.push(sigma.clone());
        return;
    }
    for t in 0..idx.n_comp {
        if used[t] || idx.genus[t] != idx.genus[i] {
            continue;
        }
        sigma[i] = t;
        // Check multiplicities against already-placed vertices and leaves.
        let consistent = (0..=i).chain(idx.n_comp..idx.n()).all(|j| mult[i][j] == mult[t][sigma[j]]);
        if consistent {
            used[t] = true;
            extend_vertex_map(idx, mult, i + 1, sigma, used, out);
            used[t] = false;
        }
    }
    sigma[i] = i;
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Named example graphs, one per case.
pub fn example_graph(case: CaseLabel, leaves: usize) -> DecompositionGraph {
    let comp = |id: &str, genus| ComponentVertex { id: NodeId::new(id), genus };
    let edge = |id: String, a: &str, b: &str| GraphEdge { id: NodeId::new(id), ends: [NodeId::new(a), NodeId::new(b)] };
    let leaves = leaves.max(1);
    let mut g = DecompositionGraph { components: vec![], leaves: vec![], edges: vec![] };
    let attach = |g: &mut DecompositionGraph, at: &str, count: usize| {
        for _ in 0..count {
            let k = g.leaves.len() + 1;
            g.leaves.push(NodeId::new(format!("l{k}")));
            g.edges.push(edge(format!("b{k}"), at, &format!("l{k}")));
        }
    };
    match case {
        CaseLabel::Case1 => {
            g.components.push(comp("v1", 1));
            attach(&mut g, "v1", leaves);
        }
        CaseLabel::Case2 => {
            g.components.push(comp("v1", 0));
            g.edges.push(edge("d0".into(), "v1", "v1"));
            attach(&mut g, "v1", leaves);
        }
        CaseLabel::Case3 => {
            g.components.push(comp("v1", 0));
            g.components.push(comp("v2", 0));
            g.edges.push(edge("d0".into(), "v1", "v2"));
            g.edges.push(edge("d1".into(), "v1", "v2"));
            attach(&mut g, "v1", 1);
            attach(&mut g, "v2", leaves.saturating_sub(1).max(1));
        }
        CaseLabel::Case4 => {
            for v in ["v1", "v2", "v3"] {
                g.components.push(comp(v, 0));
            }
            g.edges.push(edge("d0".into(), "v1", "v2"));
            g.edges.push(edge("d1".into(), "v2", "v3"));
            g.edges.push(edge("d2".into(), "v3", "v1"));
            attach(&mut g, "v1", 1);
            attach(&mut g, "v2", 1);
            attach(&mut g, "v3", leaves.saturating_sub(2).max(1));
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_examples() {
        for case in [CaseLabel::Case1, CaseLabel::Case2, CaseLabel::Case3, CaseLabel::Case4] {
            assert!(example_graph(case, 3).validate().valid, "{case}");
        }
        let mut g = example_graph(CaseLabel::Case3, 2);
        g.edges.retain(|e| e.id.0 != "b1");
        g.leaves.retain(|l| l.0 != "l1");
        let r = g.validate();
        assert!(!r.valid);
        assert!(r.diagnostics.iter().any(|d| d.contains("valence 2")));
        let mut d = example_graph(CaseLabel::Case1, 2);
        d.components.push(ComponentVertex { id: NodeId::new("x"), genus: 0 });
        assert!(!d.validate().valid);
    }

    #[test]
    fn json_ids_accept_numbers() {
        let g = DecompositionGraph::from_json(
            r#"{"components":[{"id":1,"genus":1}],"leaves":["a"],"edges":[{"id":7,"ends":[1,"a"]}]}"#,
        )
        .unwrap();
        assert!(g.validate().valid);
        assert_eq!(g.classify_case().unwrap(), CaseLabel::Case1);
    }

    #[test]
    fn ranks_and_cases() {
        assert_eq!(example_graph(CaseLabel::Case1, 4).cycle_rank().unwrap(), 0);
        assert_eq!(example_graph(CaseLabel::Case2, 3).cycle_rank().unwrap(), 1);
        assert_eq!(example_graph(CaseLabel::Case3, 2).cycle_rank().unwrap(), 1);
        for case in [CaseLabel::Case1, CaseLabel::Case2, CaseLabel::Case3, CaseLabel::Case4] {
            assert_eq!(example_graph(case, 3).classify_case().unwrap(), case);
        }
    }

    #[test]
    fn automorphisms() {
        let a1 = example_graph(CaseLabel::Case1, 3).leaf_fixing_automorphisms().unwrap();
        assert_eq!(a1.len(), 1);
        assert!(a1[0].is_identity());
        let a2 = example_graph(CaseLabel::Case2, 2).leaf_fixing_automorphisms().unwrap();
        assert_eq!(a2.len(), 2);
        assert!(a2.iter().all(GraphAutomorphism::is_vertex_identity));
        assert_eq!(a2.iter().filter(|a| a.reversed_loops.len() == 1).count(), 1);
        let a3 = example_graph(CaseLabel::Case3, 2).leaf_fixing_automorphisms().unwrap();
        assert_eq!(a3.len(), 2);
        let swap = a3.iter().find(|a| !a.is_identity()).unwrap();
        assert_eq!(swap.edge_map[&NodeId::new("d0")], NodeId::new("d1"));
        assert!(swap.compose(swap).is_identity());
        let a4 = example_graph(CaseLabel::Case4, 3).leaf_fixing_automorphisms().unwrap();
        assert_eq!(a4.len(), 1);
    }

    #[test]
    fn budget() {
        let g = example_graph(CaseLabel::Case1, 12);
        assert!(matches!(g.leaf_fixing_automorphisms(), Err(Error::BudgetExceeded(_))));
        assert_eq!(g.leaf_fixing_automorphisms_within(13).unwrap().len(), 1);
    }
}
