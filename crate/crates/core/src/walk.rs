//! Temporal walks and paths.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Label, TemporalGraph, Vertex};

/// An alternating sequence `(x0, e1, x1, ..., eq, xq)` of vertices and edge
/// indices with non-decreasing labels. A walk whose vertices are pairwise
/// distinct is a temporal path.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TemporalWalk {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<usize>,
}

impl TemporalWalk {
    /// The length-0 walk sitting at `v`.
    pub fn trivial(v: Vertex) -> Self {
        Self {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    pub fn source(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn target(&self) -> Vertex {
        *self.vertices.last().expect("walks have at least one vertex")
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_path(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.vertices.len());
        self.vertices.iter().all(|v| seen.insert(*v))
    }

    pub fn labels(&self, g: &TemporalGraph) -> Vec<Label> {
        self.edges.iter().map(|&e| g.label(e)).collect()
    }

    /// `λ(E(P))`, the snapshots this walk is active in.
    pub fn label_set(&self, g: &TemporalGraph) -> BTreeSet<Label> {
        self.edges.iter().map(|&e| g.label(e)).collect()
    }

    /// Re-checks incidence and label monotonicity against `g`.
    pub fn check(&self, g: &TemporalGraph) -> Result<()> {
        if self.vertices.len() != self.edges.len() + 1 {
            return Err(Error::MalformedWalk(format!(
                "{} vertices for {} edges",
                self.vertices.len(),
                self.edges.len()
            )));
        }
        let mut last = 0;
        for (i, &e) in self.edges.iter().enumerate() {
            if e >= g.edge_count() {
                return Err(Error::UnknownEdge(e as u64));
            }
            let edge = g.edge(e);
            let (a, b) = (self.vertices[i], self.vertices[i + 1]);
            if edge.other(a) != Some(b) {
                let vertex = if edge.is_incident(a) { b } else { a };
                return Err(Error::NonIncident {
                    index: i,
                    edge: edge.id,
                    vertex: g.name(vertex).to_string(),
                });
            }
            if edge.label < last {
                return Err(Error::DecreasingLabel { index: i });
            }
            last = edge.label;
        }
        Ok(())
    }

    /// Removes closed sub-walks so every vertex appears once.
    ///
    /// The result uses a subsequence of the original edges, so labels stay
    /// non-decreasing and the label set can only shrink.
    pub fn shortcut(&self) -> TemporalWalk {
        let mut vertices: Vec<Vertex> = Vec::with_capacity(self.vertices.len());
        let mut edges: Vec<usize> = Vec::with_capacity(self.edges.len());
        for (i, &v) in self.vertices.iter().enumerate() {
            if let Some(pos) = vertices.iter().position(|&x| x == v) {
                vertices.truncate(pos + 1);
                edges.truncate(pos);
            } else {
                if i > 0 {
                    edges.push(self.edges[i - 1]);
                }
                vertices.push(v);
            }
        }
        TemporalWalk { vertices, edges }
    }

    /// Renders the walk as `(x0,t1,x1,...)` using vertex names and labels.
    pub fn display(&self, g: &TemporalGraph) -> String {
        let mut out = String::from("(");
        out.push_str(g.name(self.vertices[0]));
        for (i, &e) in self.edges.iter().enumerate() {
            let _ = write!(out, ",{},{}", g.label(e), g.name(self.vertices[i + 1]));
        }
        out.push(')');
        out
    }
}

/// Validates a candidate walk given by vertex names and edge ids.
pub fn validate_walk(g: &TemporalGraph, vertices: &[&str], edge_ids: &[u64]) -> Result<TemporalWalk> {
    if vertices.len() != edge_ids.len() + 1 {
        return Err(Error::MalformedWalk(format!(
            "{} vertices for {} edges",
            vertices.len(),
            edge_ids.len()
        )));
    }
    let vertices = vertices.iter().map(|v| g.vertex(v)).collect::<Result<Vec<_>>>()?;
    let edges = edge_ids
        .iter()
        .map(|&id| g.edge_by_id(id).ok_or(Error::UnknownEdge(id)))
        .collect::<Result<Vec<_>>>()?;
    let walk = TemporalWalk { vertices, edges };
    walk.check(g)?;
    Ok(walk)
}

/// Resolves the usual notation `(x0,t1,x1,...)`: vertex names with the
/// label of each step. Parallel edges have distinct labels, so the edge is unique.
pub fn walk_from_labels(g: &TemporalGraph, vertices: &[&str], labels: &[Label]) -> Result<TemporalWalk> {
    if vertices.len() != labels.len() + 1 {
        return Err(Error::MalformedWalk(format!(
            "{} vertices for {} labels",
            vertices.len(),
            labels.len()
        )));
    }
    let vs = vertices.iter().map(|v| g.vertex(v)).collect::<Result<Vec<_>>>()?;
    let mut edges = Vec::with_capacity(labels.len());
    for (i, &t) in labels.iter().enumerate() {
        let e = g
            .find_edge(vs[i], vs[i + 1], t)
            .ok_or_else(|| Error::MalformedWalk(format!("no edge {}-{} at {}", vertices[i], vertices[i + 1], t)))?;
        edges.push(e);
    }
    let walk = TemporalWalk { vertices: vs, edges };
    walk.check(g)?;
    Ok(walk)
}

/// All temporal `s,z`-paths in lexicographic order of their edge-id sequences.
///
/// Fails with [`Error::LimitExceeded`] once more than `limit` paths exist.
pub fn enumerate_paths(g: &TemporalGraph, s: Vertex, z: Vertex, limit: usize) -> Result<Vec<TemporalWalk>> {
    if s == z {
        return Ok(vec![TemporalWalk::trivial(s)]);
    }
    let mut adj: Vec<Vec<usize>> = (0..g.vertex_count()).map(|v| g.incident(v).to_vec()).collect();
    for list in &mut adj {
        list.sort_by_key(|&e| g.edge(e).id);
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    let mut vertices = vec![s];
    let mut edges = Vec::new();
    on_path[s] = true;
    dfs(g, &adj, z, 0, limit, &mut on_path, &mut vertices, &mut edges, &mut out)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    g: &TemporalGraph,
    adj: &[Vec<usize>],
    z: Vertex,
    last: Label,
    limit: usize,
    on_path: &mut [bool],
    vertices: &mut Vec<Vertex>,
    edges: &mut Vec<usize>,
    out: &mut Vec<TemporalWalk>,
) -> Result<()> {
    let x = *vertices.last().unwrap();
    if x == z {
        if out.len() == limit {
            return Err(Error::LimitExceeded { limit });
        }
        out.push(TemporalWalk {
            vertices: vertices.clone(),
            edges: edges.clone(),
        });
        return Ok(());
    }
    for &e in &adj[x] {
        let edge = g.edge(e);
        let y = edge.other(x).unwrap();
        if edge.label < last || on_path[y] {
            continue;
        }
        on_path[y] = true;
        vertices.push(y);
        edges.push(e);
        dfs(g, adj, z, edge.label, limit, on_path, vertices, edges, out)?;
        edges.pop();
        vertices.pop();
        on_path[y] = false;
    }
    Ok(())
}

/// True when the walks have pairwise disjoint label sets.
pub fn pairwise_snapshot_disjoint(g: &TemporalGraph, walks: &[TemporalWalk]) -> bool {
    let sets: Vec<BTreeSet<Label>> = walks.iter().map(|w| w.label_set(g)).collect();
    sets.iter()
        .enumerate()
        .all(|(i, a)| sets[i + 1..].iter().all(|b| a.is_disjoint(b)))
}

/// True when no edge is shared between two of the walks.
pub fn pairwise_edge_disjoint(walks: &[TemporalWalk]) -> bool {
    let mut seen = HashSet::new();
    walks.iter().all(|w| {
        let own: HashSet<usize> = w.edges.iter().copied().collect();
        own.into_iter().all(|e| seen.insert(e))
    })
}

/// Checks that `family` consists of valid temporal `s,z`-paths that are
/// pairwise snapshot disjoint.
pub fn is_snapshot_disjoint_family(g: &TemporalGraph, s: Vertex, z: Vertex, family: &[TemporalWalk]) -> bool {
    family
        .iter()
        .all(|p| p.check(g).is_ok() && p.is_path() && p.source() == s && p.target() == z)
        && pairwise_snapshot_disjoint(g, family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fig1a_walk_that_is_not_a_path() {
        let g = fixtures::fig1a();
        let w = walk_from_labels(&g, &["w", "z", "v", "z", "u"], &[2, 2, 3, 4]).unwrap();
        assert!(!w.is_path());
        let p = walk_from_labels(&g, &["w", "z", "u"], &[2, 4]).unwrap();
        assert!(p.is_path());
    }

    #[test]
    fn single_vertex_walk_is_a_path() {
        let g = fixtures::fig1a();
        let w = validate_walk(&g, &["s"], &[]).unwrap();
        assert!(w.is_path());
        assert_eq!(w.len(), 0);
    }

    #[test]
    fn validate_walk_reports_errors() {
        let g = TemporalGraph::from_triples(&[("a", "b", 2), ("b", "c", 1)]).unwrap();
        assert!(matches!(
            validate_walk(&g, &["a", "q"], &[0]),
            Err(Error::UnknownVertex(_))
        ));
        assert!(matches!(
            validate_walk(&g, &["a", "b"], &[9]),
            Err(Error::UnknownEdge(9))
        ));
        assert!(matches!(
            validate_walk(&g, &["a", "c"], &[0]),
            Err(Error::NonIncident { index: 0, .. })
        ));
        assert!(matches!(
            validate_walk(&g, &["a", "b", "c"], &[0, 1]),
            Err(Error::DecreasingLabel { index: 1 })
        ));
        assert!(matches!(
            validate_walk(&g, &["a", "b"], &[]),
            Err(Error::MalformedWalk(_))
        ));
    }

    #[test]
    fn fig1b_has_exactly_four_paths() {
        let g = fixtures::fig1b();
        let (s, z) = (g.vertex("s").unwrap(), g.vertex("z").unwrap());
        let paths = enumerate_paths(&g, s, z, 100).unwrap();
        let mut seqs: Vec<Vec<Label>> = paths.iter().map(|p| p.labels(&g)).collect();
        seqs.sort();
        assert_eq!(seqs, vec![vec![1, 1, 2], vec![1, 1, 3], vec![1, 3, 3], vec![2, 3, 3]]);
        assert!(matches!(
            enumerate_paths(&g, s, z, 3),
            Err(Error::LimitExceeded { limit: 3 })
        ));
    }

    #[test]
    fn fig1a_paths_include_the_short_one() {
        let g = fixtures::fig1a();
        let (s, z) = (g.vertex("s").unwrap(), g.vertex("z").unwrap());
        let paths = enumerate_paths(&g, s, z, 1000).unwrap();
        let short = walk_from_labels(&g, &["s", "w", "z"], &[1, 2]).unwrap();
        assert!(paths.contains(&short));
        for p in &paths {
            assert!(p.check(&g).is_ok() && p.is_path());
        }
        // lexicographic by edge ids
        let ids: Vec<Vec<u64>> = paths
            .iter()
            .map(|p| p.edges.iter().map(|&e| g.edge(e).id).collect())
            .collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn edgeless_graph_has_no_paths() {
        let mut g = TemporalGraph::new();
        let (s, z) = (g.add_vertex("s"), g.add_vertex("z"));
        assert!(enumerate_paths(&g, s, z, 10).unwrap().is_empty());
    }

    #[test]
    fn shortcut_removes_cycles() {
        let g = fixtures::fig1a();
        let w = walk_from_labels(&g, &["w", "z", "v", "z", "u"], &[2, 2, 3, 4]).unwrap();
        let p = w.shortcut();
        assert!(p.is_path());
        assert!(p.check(&g).is_ok());
        assert_eq!(p.display(&g), "(w,2,z,4,u)");
    }

    #[test]
    fn stated_families_on_fig1a() {
        let g = fixtures::fig1a();
        let (s, z) = (g.vertex("s").unwrap(), g.vertex("z").unwrap());
        let a = walk_from_labels(&g, &["s", "w", "v", "z"], &[1, 1, 2]).unwrap();
        let b = walk_from_labels(&g, &["s", "w", "u", "z"], &[3, 3, 3]).unwrap();
        assert!(is_snapshot_disjoint_family(&g, s, z, &[a, b.clone()]));
        let c = walk_from_labels(&g, &["s", "w", "z"], &[1, 2]).unwrap();
        assert!(pairwise_edge_disjoint(&[c.clone(), b]));
        let d = walk_from_labels(&g, &["s", "u", "z"], &[2, 3]).unwrap();
        assert!(!pairwise_snapshot_disjoint(&g, &[c, d]));
    }
}
