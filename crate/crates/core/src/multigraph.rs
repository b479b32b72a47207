//! Label-free multigraphs, the base graphs that Mengerian recognition and the
//! minor matcher work on.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Label, TemporalGraph, Vertex};

/// A multigraph stored as multiedges with explicit multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MGraph {
    names: Vec<String>,
    index: HashMap<String, Vertex>,
    multi: BTreeMap<(Vertex, Vertex), usize>,
}

/// A timefunction on a multigraph, written per multiedge as the sorted labels
/// of its parallel edges.
pub type LabelPattern = BTreeMap<(Vertex, Vertex), Vec<Label>>;

fn key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    (u.min(v), u.max(v))
}

impl MGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a multigraph from `(u, v, multiplicity)` triples.
    pub fn from_multiedges(list: &[(&str, &str, usize)]) -> Result<Self> {
        let mut g = Self::new();
        for &(u, v, m) in list {
            g.add_multiedge(u, v, m)?;
        }
        Ok(g)
    }

    /// A graph on vertices `0..n` named by their index.
    pub fn with_vertices(n: usize) -> Self {
        let mut g = Self::new();
        for i in 0..n {
            g.add_vertex(&i.to_string());
        }
        g
    }

    pub fn add_vertex(&mut self, name: &str) -> Vertex {
        if let Some(&v) = self.index.get(name) {
            return v;
        }
        let v = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), v);
        v
    }

    /// Adds `mult` parallel edges between `u` and `v`.
    pub fn add_multiedge(&mut self, u: &str, v: &str, mult: usize) -> Result<()> {
        let (u, v) = (self.add_vertex(u), self.add_vertex(v));
        self.add_multiedge_between(u, v, mult)
    }

    pub fn add_multiedge_between(&mut self, u: Vertex, v: Vertex, mult: usize) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop {
                u: self.names[u].clone(),
                v: self.names[v].clone(),
            });
        }
        if u >= self.names.len() || v >= self.names.len() {
            return Err(Error::UnknownVertex(format!("#{}", u.max(v))));
        }
        if mult > 0 {
            *self.multi.entry(key(u, v)).or_insert(0) += mult;
        }
        Ok(())
    }

    /// Sets the multiplicity of `uv`; zero removes the multiedge.
    pub fn set_multiplicity(&mut self, u: Vertex, v: Vertex, mult: usize) {
        if mult == 0 {
            self.multi.remove(&key(u, v));
        } else {
            self.multi.insert(key(u, v), mult);
        }
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

    /// Total number of edges, counting multiplicity.
    pub fn edge_count(&self) -> usize {
        self.multi.values().sum()
    }

    pub fn multiedge_count(&self) -> usize {
        self.multi.len()
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        self.multi.get(&key(u, v)).copied().unwrap_or(0)
    }

    /// Multiedges as `((u, v), multiplicity)` with `u < v`, in sorted order.
    pub fn multiedges(&self) -> impl Iterator<Item = ((Vertex, Vertex), usize)> + '_ {
        self.multi.iter().map(|(&k, &m)| (k, m))
    }

    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        self.multi
            .keys()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Degree in `U(G)`.
    pub fn simple_degree(&self, v: Vertex) -> usize {
        self.multi.keys().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn is_simple(&self) -> bool {
        self.multi.values().all(|&m| m == 1)
    }

    /// `U(G)`: every multiplicity reduced to one.
    pub fn underlying(&self) -> MGraph {
        let mut g = self.clone();
        for m in g.multi.values_mut() {
            *m = 1;
        }
        g
    }

    /// Adjacency lists of `U(G)` restricted to multiedges of multiplicity at least `min_mult`.
    pub fn adjacency(&self, min_mult: usize) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for (&(a, b), &m) in &self.multi {
            if m >= min_mult {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        adj
    }

    /// Connected components of `U(G)`, each as a sorted vertex list.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let adj = self.adjacency(1);
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for root in 0..self.vertex_count() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The subgraph induced on `keep`, with vertex names preserved.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> MGraph {
        let mut g = MGraph::new();
        for &v in keep {
            g.add_vertex(&self.names[v]);
        }
        for (&(a, b), &m) in &self.multi {
            if keep.contains(&a) && keep.contains(&b) {
                g.add_multiedge(&self.names[a], &self.names[b], m).unwrap();
            }
        }
        g
    }

    /// The m-subdivision of the multiedge `uv`: its μ parallel edges are
    /// replaced by multiedges `u w` and `w v`, both of multiplicity μ, through
    /// one fresh vertex `w`.
    pub fn m_subdivide(&self, u: Vertex, v: Vertex) -> Result<MGraph> {
        let mult = self.multiplicity(u, v);
        if mult == 0 {
            let name = |x: Vertex| self.names.get(x).cloned().unwrap_or_else(|| format!("#{x}"));
            return Err(Error::MissingMultiedge(name(u), name(v)));
        }
        let mut g = self.clone();
        let mut fresh = format!("{}~{}", self.names[u], self.names[v]);
        while g.index.contains_key(&fresh) {
            fresh.push('\'');
        }
        let w = g.add_vertex(&fresh);
        g.multi.remove(&key(u, v));
        g.multi.insert(key(u, w), mult);
        g.multi.insert(key(w, v), mult);
        Ok(g)
    }

    /// Attaches a timefunction. Every multiedge must receive exactly as many
    /// distinct labels as its multiplicity.
    pub fn labeled(&self, pattern: &LabelPattern) -> Result<TemporalGraph> {
        let mut g = TemporalGraph::new();
        for name in &self.names {
            g.add_vertex(name);
        }
        for (&(a, b), &m) in &self.multi {
            let labels = pattern.get(&(a, b)).map(Vec::as_slice).unwrap_or(&[]);
            if labels.len() != m {
                return Err(Error::InvalidInput(format!(
                    "multiedge {}-{} has multiplicity {m} but {} labels",
                    self.names[a],
                    self.names[b],
                    labels.len()
                )));
            }
            for &t in labels {
                g.add_edge_between(a, b, t)?;
            }
        }
        Ok(g)
    }

    /// Every sub-multigraph obtained by lowering multiplicities (vertices kept).
    pub fn edge_subgraphs(&self) -> Vec<MGraph> {
        let entries: Vec<((Vertex, Vertex), usize)> = self.multiedges().collect();
        let mut out = Vec::new();
        let mut current = vec![0usize; entries.len()];
        loop {
            let mut g = MGraph {
                names: self.names.clone(),
                index: self.index.clone(),
                multi: BTreeMap::new(),
            };
            for (i, &((a, b), _)) in entries.iter().enumerate() {
                g.set_multiplicity(a, b, current[i]);
            }
            out.push(g);
            let mut i = 0;
            loop {
                if i == entries.len() {
                    return out;
                }
                if current[i] < entries[i].1 {
                    current[i] += 1;
                    break;
                }
                current[i] = 0;
                i += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_subdivision_keeps_multiplicity() {
        let g = MGraph::from_multiedges(&[("x", "y", 3)]).unwrap();
        let h = g.m_subdivide(0, 1).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.multiplicity(0, 2), 3);
        assert_eq!(h.multiplicity(2, 1), 3);
        assert_eq!(h.multiplicity(0, 1), 0);
    }

    #[test]
    fn subdividing_a_simple_edge_is_ordinary_subdivision() {
        let g = MGraph::from_multiedges(&[("x", "y", 1)]).unwrap();
        let h = g.m_subdivide(0, 1).unwrap();
        assert_eq!(h.edge_count(), 2);
        assert!(h.is_simple());
    }

    #[test]
    fn subdividing_a_triangle_side_gives_a_four_cycle() {
        let g = MGraph::from_multiedges(&[("a", "b", 1), ("b", "c", 1), ("c", "a", 1)]).unwrap();
        let h = g.m_subdivide(0, 1).unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.multiedge_count(), 4);
        assert!((0..4).all(|v| h.simple_degree(v) == 2));
        assert_eq!(h.components().len(), 1);
    }

    #[test]
    fn missing_multiedge_is_an_error() {
        let g = MGraph::from_multiedges(&[("x", "y", 1), ("y", "z", 1)]).unwrap();
        assert!(matches!(g.m_subdivide(0, 2), Err(Error::MissingMultiedge(..))));
    }

    #[test]
    fn labeled_checks_label_counts() {
        let g = MGraph::from_multiedges(&[("x", "y", 2)]).unwrap();
        let mut p = LabelPattern::new();
        p.insert((0, 1), vec![1]);
        assert!(g.labeled(&p).is_err());
        p.insert((0, 1), vec![1, 1]);
        assert!(matches!(g.labeled(&p), Err(Error::DuplicateLabel { .. })));
        p.insert((0, 1), vec![1, 4]);
        assert_eq!(g.labeled(&p).unwrap().edge_count(), 2);
    }

    #[test]
    fn edge_subgraph_count() {
        let g = MGraph::from_multiedges(&[("x", "y", 2), ("y", "z", 1)]).unwrap();
        assert_eq!(g.edge_subgraphs().len(), 6);
    }
}
