//! Temporal multigraphs and time-respecting reachability.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::multigraph::MGraph;
use crate::walk::TemporalWalk;

/// Dense vertex index into a graph's vertex table.
pub type Vertex = usize;

/// A timestep. Labels are positive; `0` is reserved for sentinels.
pub type Label = u32;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TemporalEdge {
    pub id: u64,
    pub u: Vertex,
    pub v: Vertex,
    pub label: Label,
}

impl TemporalEdge {
    pub fn is_incident(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite to `x`, if `x` is an endpoint.
    pub fn other(&self, x: Vertex) -> Option<Vertex> {
        if self.u == x {
            Some(self.v)
        } else if self.v == x {
            Some(self.u)
        } else {
            None
        }
    }

    /// Endpoints as an ordered pair, the key of the multiedge this edge belongs to.
    pub fn multiedge(&self) -> (Vertex, Vertex) {
        (self.u.min(self.v), self.u.max(self.v))
    }

    pub fn shares_endpoint(&self, other: &TemporalEdge) -> bool {
        self.is_incident(other.u) || self.is_incident(other.v)
    }
}

/// An undirected temporal multigraph `(G, λ)`.
///
/// Every edge carries exactly one positive label. Parallel edges must carry
/// distinct labels so that each snapshot is a simple graph.
#[derive(Clone, Debug, Default)]
pub struct TemporalGraph {
    names: Vec<String>,
    index: HashMap<String, Vertex>,
    edges: Vec<TemporalEdge>,
    incident: Vec<Vec<usize>>,
    by_key: HashMap<(Vertex, Vertex, Label), usize>,
    ids: HashMap<u64, usize>,
    // edge indices sorted by (label, id)
    by_label: Vec<usize>,
}

impl TemporalGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from `(u, v, label)` triples; edge ids are assigned in order.
    pub fn from_triples(triples: &[(&str, &str, Label)]) -> Result<Self> {
        let mut g = Self::new();
        for &(u, v, t) in triples {
            g.add_edge(u, v, t)?;
        }
        Ok(g)
    }

    /// Adds a vertex, returning the existing index if the name is taken.
    pub fn add_vertex(&mut self, name: &str) -> Vertex {
        if let Some(&v) = self.index.get(name) {
            return v;
        }
        let v = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), v);
        self.incident.push(Vec::new());
        v
    }

    /// Adds an edge with the next free id.
    pub fn add_edge(&mut self, u: &str, v: &str, label: Label) -> Result<usize> {
        let id = self.next_id();
        self.add_edge_with_id(id, u, v, label)
    }

    pub fn add_edge_with_id(&mut self, id: u64, u: &str, v: &str, label: Label) -> Result<usize> {
        let (u, v) = (self.add_vertex(u), self.add_vertex(v));
        self.insert_edge(id, u, v, label)
    }

    /// Adds an edge between existing vertex indices.
    pub fn add_edge_between(&mut self, u: Vertex, v: Vertex, label: Label) -> Result<usize> {
        if u >= self.names.len() || v >= self.names.len() {
            return Err(Error::UnknownVertex(format!("#{}", u.max(v))));
        }
        let id = self.next_id();
        self.insert_edge(id, u, v, label)
    }

    fn next_id(&self) -> u64 {
        self.edges.iter().map(|e| e.id + 1).max().unwrap_or(0)
    }

    fn insert_edge(&mut self, id: u64, u: Vertex, v: Vertex, label: Label) -> Result<usize> {
        if u == v {
            return Err(Error::SelfLoop {
                u: self.names[u].clone(),
                v: self.names[v].clone(),
            });
        }
        if label == 0 {
            return Err(Error::ZeroLabel(id));
        }
        if self.ids.contains_key(&id) {
            return Err(Error::DuplicateEdgeId(id));
        }
        let key = (u.min(v), u.max(v), label);
        if self.by_key.contains_key(&key) {
            return Err(Error::DuplicateLabel {
                u: self.names[u].clone(),
                v: self.names[v].clone(),
                label,
            });
        }
        let idx = self.edges.len();
        self.edges.push(TemporalEdge { id, u, v, label });
        self.incident[u].push(idx);
        self.incident[v].push(idx);
        self.by_key.insert(key, idx);
        self.ids.insert(id, idx);
        let edges = &self.edges;
        let pos = self
            .by_label
            .partition_point(|&e| (edges[e].label, edges[e].id) < (label, id));
        self.by_label.insert(pos, idx);
        Ok(idx)
    }

    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[TemporalEdge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &TemporalEdge {
        &self.edges[e]
    }

    pub fn label(&self, e: usize) -> Label {
        self.edges[e].label
    }

    /// Indices of the edges incident to `v`, in insertion order.
    pub fn incident(&self, v: Vertex) -> &[usize] {
        &self.incident[v]
    }

    pub fn edge_by_id(&self, id: u64) -> Option<usize> {
        self.ids.get(&id).copied()
    }

    pub fn find_edge(&self, u: Vertex, v: Vertex, label: Label) -> Option<usize> {
        self.by_key.get(&(u.min(v), u.max(v), label)).copied()
    }

    /// Edge indices in increasing label order (ties by id).
    pub fn edges_by_label(&self) -> &[usize] {
        &self.by_label
    }

    /// The lifetime `τ`: the largest label, or 0 for an edgeless graph.
    pub fn lifetime(&self) -> Label {
        self.edges.iter().map(|e| e.label).max().unwrap_or(0)
    }

    pub fn labels(&self) -> BTreeSet<Label> {
        self.edges.iter().map(|e| e.label).collect()
    }

    /// Returns the first label carried by two edges, if any.
    pub fn repeated_label(&self) -> Option<Label> {
        let mut seen = BTreeSet::new();
        self.by_label
            .iter()
            .map(|&e| self.edges[e].label)
            .find(|&t| !seen.insert(t))
    }

    pub fn is_injective(&self) -> bool {
        self.repeated_label().is_none()
    }

    /// The label-free base multigraph `G`.
    pub fn base(&self) -> MGraph {
        let mut g = MGraph::new();
        for name in &self.names {
            g.add_vertex(name);
        }
        for e in &self.edges {
            g.add_multiedge_between(e.u, e.v, 1).expect("edges are loop-free");
        }
        g
    }

    /// Same graph with every label passed through `f`; ids and vertices are kept.
    pub fn relabel(&self, f: impl Fn(Label) -> Label) -> Result<TemporalGraph> {
        let mut g = TemporalGraph::new();
        for name in &self.names {
            g.add_vertex(name);
        }
        for e in &self.edges {
            g.insert_edge(e.id, e.u, e.v, f(e.label))?;
        }
        Ok(g)
    }

    /// The graph `G_S` keeping only edges whose label is not in `removed`.
    pub fn without_labels(&self, removed: &BTreeSet<Label>) -> TemporalGraph {
        self.filter_edges(|e| !removed.contains(&e.label))
    }

    pub fn filter_edges(&self, keep: impl Fn(&TemporalEdge) -> bool) -> TemporalGraph {
        let mut g = TemporalGraph::new();
        for name in &self.names {
            g.add_vertex(name);
        }
        for e in self.edges.iter().filter(|e| keep(e)) {
            g.insert_edge(e.id, e.u, e.v, e.label)
                .expect("subgraph of a valid graph");
        }
        g
    }

    /// Earliest-arrival search: a temporal `s,z`-path if one exists.
    pub fn reachable(&self, s: Vertex, z: Vertex) -> Option<TemporalWalk> {
        self.reachable_with(s, z, |_| true)
    }

    /// Like [`reachable`](Self::reachable) but only over edges accepted by `allow`.
    ///
    /// Sweeps label classes in increasing order; within one class the reached
    /// set is closed under edges of that class since equal labels may be chained.
    pub fn reachable_with(&self, s: Vertex, z: Vertex, allow: impl Fn(usize) -> bool) -> Option<TemporalWalk> {
        if s == z {
            return Some(TemporalWalk::trivial(s));
        }
        let n = self.vertex_count();
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let mut reached = vec![false; n];
        reached[s] = true;
        let order = &self.by_label;
        let mut i = 0;
        while i < order.len() {
            let t = self.edges[order[i]].label;
            let mut j = i;
            while j < order.len() && self.edges[order[j]].label == t {
                j += 1;
            }
            let group = &order[i..j];
            loop {
                let mut changed = false;
                for &e in group {
                    if !allow(e) {
                        continue;
                    }
                    let TemporalEdge { u, v, .. } = self.edges[e];
                    let step = match (reached[u], reached[v]) {
                        (true, false) => Some(v),
                        (false, true) => Some(u),
                        _ => None,
                    };
                    if let Some(x) = step {
                        reached[x] = true;
                        parent[x] = Some(e);
                        changed = true;
                    }
                }
                if reached[z] || !changed {
                    break;
                }
            }
            if reached[z] {
                break;
            }
            i = j;
        }
        if !reached[z] {
            return None;
        }
        let mut vertices = vec![z];
        let mut edges = Vec::new();
        let mut x = z;
        while let Some(e) = parent[x] {
            edges.push(e);
            x = self.edges[e].other(x).expect("parent edge is incident");
            vertices.push(x);
        }
        vertices.reverse();
        edges.reverse();
        Some(TemporalWalk { vertices, edges })
    }

    /// Labels of edges that can lie on a temporal `s,z`-walk visiting `s` and `z`
    /// only at its ends.
    ///
    /// An edge `xy` at `t` qualifies when `x` can be reached by time `t` and `z`
    /// can still be reached from `y` departing at `t` (or symmetrically). This
    /// over-approximates the labels used by temporal paths, never under.
    pub fn relevant_labels(&self, s: Vertex, z: Vertex) -> BTreeSet<Label> {
        let arrive = self.sweep(s, z, true);
        let depart = self.sweep(z, s, false);
        self.edges
            .iter()
            .filter(|e| {
                let t = e.label;
                let fits = |a: Vertex, b: Vertex| {
                    a != z && b != s && matches!(arrive[a], Some(x) if x <= t) && matches!(depart[b], Some(y) if y >= t)
                };
                fits(e.u, e.v) || fits(e.v, e.u)
            })
            .map(|e| e.label)
            .collect()
    }

    // Forward: earliest arrival from `root` (root gets 0).
    // Backward: latest departure still reaching `root` (root gets Label::MAX).
    // Nothing propagates out of `sink`.
    fn sweep(&self, root: Vertex, sink: Vertex, forward: bool) -> Vec<Option<Label>> {
        let mut time: Vec<Option<Label>> = vec![None; self.vertex_count()];
        time[root] = Some(if forward { 0 } else { Label::MAX });
        let order: Vec<usize> = if forward {
            self.by_label.clone()
        } else {
            self.by_label.iter().rev().copied().collect()
        };
        let mut i = 0;
        while i < order.len() {
            let t = self.edges[order[i]].label;
            let mut j = i;
            while j < order.len() && self.edges[order[j]].label == t {
                j += 1;
            }
            loop {
                let mut changed = false;
                for &e in &order[i..j] {
                    let TemporalEdge { u, v, .. } = self.edges[e];
                    for (a, b) in [(u, v), (v, u)] {
                        if a != sink && time[a].is_some() && time[b].is_none() {
                            time[b] = Some(t);
                            changed = true;
                        }
                    }
                }
                if !changed {
                    break;
                }
            }
            i = j;
        }
        time
    }
}

/// `G_S`: a temporal graph seen through the removal of a set of timesteps.
#[derive(Clone, Debug)]
pub struct FilteredGraph<'a> {
    source: &'a TemporalGraph,
    removed: BTreeSet<Label>,
}

impl<'a> FilteredGraph<'a> {
    pub fn new(source: &'a TemporalGraph, removed: BTreeSet<Label>) -> Self {
        Self { source, removed }
    }

    pub fn source(&self) -> &TemporalGraph {
        self.source
    }

    pub fn removed(&self) -> &BTreeSet<Label> {
        &self.removed
    }

    pub fn survives(&self, e: usize) -> bool {
        !self.removed.contains(&self.source.label(e))
    }

    /// Materializes `G_S` with `λ_S` the restriction of `λ`.
    pub fn graph(&self) -> TemporalGraph {
        self.source.without_labels(&self.removed)
    }

    pub fn reachable(&self, s: Vertex, z: Vertex) -> Option<TemporalWalk> {
        self.source.reachable_with(s, z, |e| self.survives(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn rejects_loops_zero_labels_and_parallel_duplicates() {
        let mut g = TemporalGraph::new();
        assert!(matches!(g.add_edge("a", "a", 1), Err(Error::SelfLoop { .. })));
        assert!(matches!(g.add_edge("a", "b", 0), Err(Error::ZeroLabel(_))));
        g.add_edge("a", "b", 1).unwrap();
        assert!(matches!(g.add_edge("b", "a", 1), Err(Error::DuplicateLabel { .. })));
        g.add_edge("b", "a", 2).unwrap();
        assert!(matches!(
            g.add_edge_with_id(0, "a", "c", 1),
            Err(Error::DuplicateEdgeId(0))
        ));
        assert_eq!(g.lifetime(), 2);
    }

    #[test]
    fn edgeless_lifetime_is_zero() {
        let mut g = TemporalGraph::new();
        g.add_vertex("x");
        assert_eq!(g.lifetime(), 0);
    }

    #[test]
    fn reachability_on_fixtures() {
        let g = fixtures::fig1b();
        let (s, z) = (g.vertex("s").unwrap(), g.vertex("z").unwrap());
        let w = g.reachable(s, z).unwrap();
        assert_eq!(w.vertices.first(), Some(&s));
        assert_eq!(w.vertices.last(), Some(&z));
        assert!(w.is_path());
        assert!(w.check(&g).is_ok());
        assert_eq!(g.reachable(s, s).unwrap().edges.len(), 0);

        let mut h = TemporalGraph::new();
        let (a, b) = (h.add_vertex("a"), h.add_vertex("b"));
        assert!(h.reachable(a, b).is_none());
    }

    #[test]
    fn reachability_respects_time() {
        let g = TemporalGraph::from_triples(&[("s", "a", 2), ("a", "z", 1)]).unwrap();
        assert!(g.reachable(0, 2).is_none());
        let g = TemporalGraph::from_triples(&[("s", "a", 1), ("a", "b", 1), ("b", "z", 1)]).unwrap();
        assert_eq!(g.reachable(0, 3).unwrap().edges.len(), 3);
    }

    #[test]
    fn filtered_graph_cuts_fig1a() {
        let g = fixtures::fig1a();
        let (s, z) = (g.vertex("s").unwrap(), g.vertex("z").unwrap());
        let f = FilteredGraph::new(&g, [2, 3].into_iter().collect());
        assert!(f.reachable(s, z).is_none());
        assert!(f.graph().reachable(s, z).is_none());
        // v stays reachable through timestep 1
        assert!(f.reachable(s, g.vertex("v").unwrap()).is_some());
    }

    #[test]
    fn relevant_labels_skip_dead_edges() {
        // the edge at 5 leaves z's side too late to matter and b-c is off-route
        let g = TemporalGraph::from_triples(&[
            ("s", "a", 1),
            ("a", "z", 2),
            ("z", "c", 5),
            ("s", "b", 3),
            ("b", "z", 1),
        ])
        .unwrap();
        let labels = g.relevant_labels(0, 2);
        assert_eq!(labels, [1, 2].into_iter().collect());
    }
}
