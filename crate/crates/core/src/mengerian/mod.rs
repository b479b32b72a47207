//! Polynomial-time recognition of Mengerian graphs.
//!
//! A multigraph is Mengerian when every timefunction and every pair `s`, `z`
//! give as many snapshot-disjoint paths as the minimum snapshot cut. The
//! characterization is by five forbidden m-topological minors; [`recognize`]
//! checks it through the block structure and returns an explicit witness
//! subgraph on rejection.

pub mod blocks;
pub mod catalog;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{TemporalGraph, Vertex};
use crate::minor::find_m_topological_minor;
use crate::multigraph::MGraph;

pub use blocks::{decompose, Block, BlockDecomposition};
pub use catalog::{verify_catalog, CatalogEntry, MinorName};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub minor: MinorName,
    /// A subgraph of the input (names preserved) that is an m-subdivision of the minor.
    pub subgraph: MGraph,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MengerVerdict {
    pub mengerian: bool,
    pub witness: Option<MinorWitness>,
}

#[derive(Serialize)]
struct VerdictJson {
    mengerian: bool,
    minor: Option<MinorName>,
    vertices: Vec<String>,
    multiedges: Vec<(String, String, usize)>,
}

impl MengerVerdict {
    fn accept() -> Self {
        Self {
            mengerian: true,
            witness: None,
        }
    }

    fn reject(minor: MinorName, subgraph: MGraph) -> Self {
        Self {
            mengerian: false,
            witness: Some(MinorWitness { minor, subgraph }),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let w = self.witness.as_ref();
        let v = VerdictJson {
            mengerian: self.mengerian,
            minor: w.map(|w| w.minor),
            vertices: w.map(|w| w.subgraph.names().to_vec()).unwrap_or_default(),
            multiedges: w
                .map(|w| {
                    w.subgraph
                        .multiedges()
                        .map(|((a, b), m)| (w.subgraph.name(a).to_string(), w.subgraph.name(b).to_string(), m))
                        .collect()
                })
                .unwrap_or_default(),
        };
        serde_json::to_value(v).expect("verdict serializes")
    }
}

// Collects a witness subgraph with host names.
struct WitnessBuilder<'a> {
    host: &'a MGraph,
    out: MGraph,
}

impl<'a> WitnessBuilder<'a> {
    fn new(host: &'a MGraph) -> Self {
        Self {
            host,
            out: MGraph::new(),
        }
    }

    fn edge(&mut self, a: Vertex, b: Vertex, mult: usize) {
        debug_assert!(self.host.multiplicity(a, b) >= mult);
        let (x, y) = (
            self.out.add_vertex(self.host.name(a)),
            self.out.add_vertex(self.host.name(b)),
        );
        self.out.set_multiplicity(x, y, mult);
    }

    fn walk(&mut self, vertices: &[Vertex]) {
        for w in vertices.windows(2) {
            self.edge(w[0], w[1], 1);
        }
    }
}

/// Decides whether `g` is Mengerian. Rejections name the forbidden minor and
/// carry a subgraph of `g` that realizes it.
pub fn recognize(g: &MGraph) -> MengerVerdict {
    let n = g.vertex_count();
    let d = decompose(g);
    let big: Vec<&Block> = d.blocks.iter().filter(|b| b.len() >= 3).collect();

    // a heavy bridge touching a 2-connected block
    for &i in &d.heavy_bridges {
        let (a, b) = d.blocks[i].edges[0];
        for (v, other) in [(a, b), (b, a)] {
            if let Some(block) = big.iter().find(|blk| blk.contains(v)) {
                let cycle = blocks::cycle_through(block, n, v).expect("2-connected block has a cycle");
                let mut w = WitnessBuilder::new(g);
                w.edge(other, v, 2);
                w.walk(&cycle);
                return MengerVerdict::reject(MinorName::M2, w.out);
            }
        }
    }

    // two 2-connected blocks sharing a vertex
    for (i, b1) in big.iter().enumerate() {
        for b2 in &big[i + 1..] {
            if let Some(&v) = b1.vertices.intersection(&b2.vertices).next() {
                let mut w = WitnessBuilder::new(g);
                w.walk(&blocks::cycle_through(b1, n, v).expect("cycle"));
                w.walk(&blocks::cycle_through(b2, n, v).expect("cycle"));
                return MengerVerdict::reject(MinorName::M3, w.out);
            }
        }
    }

    for block in big.iter().filter(|b| b.len() >= 4) {
        if !block.is_cycle() {
            return MengerVerdict::reject(MinorName::M5, theta(g, block));
        }
    }

    for block in big.iter().filter(|b| b.len() >= 4) {
        if let Some(&(a, b)) = block.edges.iter().find(|&&(a, b)| g.multiplicity(a, b) >= 2) {
            let mut w = WitnessBuilder::new(g);
            for &(x, y) in &block.edges {
                w.edge(x, y, if (x, y) == (a, b) { 2 } else { 1 });
            }
            return MengerVerdict::reject(MinorName::M4, w.out);
        }
    }

    // a path on four vertices among the heavy multiedges
    let heavy = g.adjacency(2);
    for ((u, v), m) in g.multiedges() {
        if m < 2 {
            continue;
        }
        for &x in heavy[u].iter().filter(|&&x| x != v) {
            if let Some(&y) = heavy[v].iter().find(|&&y| y != u && y != x) {
                let mut w = WitnessBuilder::new(g);
                w.edge(x, u, 2);
                w.edge(u, v, 2);
                w.edge(v, y, 2);
                return MengerVerdict::reject(MinorName::M1, w.out);
            }
        }
    }

    MengerVerdict::accept()
}

// A cycle plus an ear of a 2-connected block that is not a cycle: a theta
// graph with at most one branch of length one, i.e. a subdivided diamond.
fn theta(g: &MGraph, block: &Block) -> MGraph {
    let n = g.vertex_count();
    let adj = block.adjacency(n);
    let start = *block.vertices.iter().next().unwrap();
    let cycle = blocks::cycle_through(block, n, start).expect("cycle");
    let on_cycle: BTreeSet<Vertex> = cycle.iter().copied().collect();
    let cycle_edges: BTreeSet<(Vertex, Vertex)> = cycle.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))).collect();
    for &x in &cycle[..cycle.len() - 1] {
        for &y in &adj[x] {
            if cycle_edges.contains(&(x.min(y), x.max(y))) {
                continue;
            }
            let ear = if on_cycle.contains(&y) {
                Some(vec![x, y])
            } else {
                ear_from(&adj, x, y, &on_cycle)
            };
            if let Some(ear) = ear {
                let mut w = WitnessBuilder::new(g);
                w.walk(&cycle);
                w.walk(&ear);
                return w.out;
            }
        }
    }
    unreachable!("a 2-connected block that is not a cycle has an ear")
}

// Path x, y, ..., c where c is a cycle vertex other than x and the interior avoids the cycle.
fn ear_from(adj: &[Vec<Vertex>], x: Vertex, y: Vertex, on_cycle: &BTreeSet<Vertex>) -> Option<Vec<Vertex>> {
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    parent.insert(y, x);
    let mut queue = std::collections::VecDeque::from([y]);
    while let Some(a) = queue.pop_front() {
        for &b in &adj[a] {
            if b == x || parent.contains_key(&b) {
                continue;
            }
            parent.insert(b, a);
            if on_cycle.contains(&b) {
                let mut path = vec![b];
                let mut cur = b;
                while cur != x {
                    cur = parent[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(b);
        }
    }
    None
}

/// Labels a witness with the catalog timefunction, copying each pattern
/// multiedge's labels onto every multiedge of its subdivided image. Returns
/// the labeled image together with the images of `s` and `z`.
pub fn lift_catalog_labeling(w: &MinorWitness) -> Result<(TemporalGraph, Vertex, Vertex)> {
    let entry = catalog::entry(w.minor);
    let pattern = entry.pattern();
    let emb = find_m_topological_minor(&w.subgraph, &pattern)?
        .ok_or_else(|| Error::InvalidInput(format!("witness does not contain {}", w.minor)))?;
    let mut g = TemporalGraph::new();
    for &b in &emb.branch {
        g.add_vertex(w.subgraph.name(b));
    }
    for ((x, y), _, route) in &emb.routes {
        let labels: Vec<_> = entry
            .graph
            .edges()
            .iter()
            .filter(|e| e.multiedge() == (*x.min(y), *x.max(y)))
            .map(|e| e.label)
            .collect();
        for hop in route.windows(2) {
            let (a, b) = (
                g.add_vertex(w.subgraph.name(hop[0])),
                g.add_vertex(w.subgraph.name(hop[1])),
            );
            for &t in &labels {
                g.add_edge_between(a, b, t)?;
            }
        }
    }
    let s = g.vertex(w.subgraph.name(emb.branch[entry.s]))?;
    let z = g.vertex(w.subgraph.name(emb.branch[entry.z]))?;
    Ok((g, s, z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minor::has_m_topological_minor;
    use crate::oracles::{brute_force_c, brute_force_p, PATH_LIMIT};

    fn check_witness(g: &MGraph, expect: MinorName) {
        let v = recognize(g);
        assert!(!v.mengerian);
        let w = v.witness.unwrap();
        assert_eq!(w.minor, expect);
        assert!(has_m_topological_minor(&w.subgraph, &catalog::pattern(expect)).unwrap());
        for ((a, b), m) in w.subgraph.multiedges() {
            let (x, y) = (
                g.vertex(w.subgraph.name(a)).unwrap(),
                g.vertex(w.subgraph.name(b)).unwrap(),
            );
            assert!(g.multiplicity(x, y) >= m);
        }
        let (lg, s, z) = lift_catalog_labeling(&w).unwrap();
        let p = brute_force_p(&lg, s, z, PATH_LIMIT).unwrap().value;
        let c = brute_force_c(&lg, s, z, PATH_LIMIT).unwrap().value;
        assert!(p < c, "{expect}: p={p} c={c}");
    }

    #[test]
    fn catalog_entries_are_rejected_with_themselves() {
        for m in MinorName::ALL {
            check_witness(&catalog::pattern(m), m);
        }
    }

    #[test]
    fn heavy_path_of_length_two_is_mengerian() {
        let g = MGraph::from_multiedges(&[("s", "w", 5), ("w", "z", 5)]).unwrap();
        assert!(recognize(&g).mengerian);
    }

    #[test]
    fn subdivided_m3_keeps_its_witness() {
        let mut g = catalog::pattern(MinorName::M3);
        let edges: Vec<_> = g.multiedges().map(|(k, _)| k).collect();
        for (a, b) in edges.into_iter().take(3) {
            g = g.m_subdivide(a, b).unwrap();
        }
        check_witness(&g, MinorName::M3);
    }

    #[test]
    fn k4_is_rejected_by_a_theta() {
        let g = MGraph::from_multiedges(&[
            ("a", "b", 1),
            ("a", "c", 1),
            ("a", "d", 1),
            ("b", "c", 1),
            ("b", "d", 1),
            ("c", "d", 1),
        ])
        .unwrap();
        check_witness(&g, MinorName::M5);
    }

    #[test]
    fn long_cycle_with_a_heavy_edge_is_m4() {
        let g = MGraph::from_multiedges(&[
            ("a", "b", 1),
            ("b", "c", 1),
            ("c", "d", 1),
            ("d", "e", 1),
            ("e", "a", 3),
        ])
        .unwrap();
        check_witness(&g, MinorName::M4);
    }

    #[test]
    fn plain_cycles_and_trees_are_mengerian() {
        let c5 = MGraph::from_multiedges(&[
            ("a", "b", 1),
            ("b", "c", 1),
            ("c", "d", 1),
            ("d", "e", 1),
            ("e", "a", 1),
        ])
        .unwrap();
        assert!(recognize(&c5).mengerian);
        let star = MGraph::from_multiedges(&[("c", "a", 2), ("c", "b", 2), ("c", "d", 2)]).unwrap();
        assert!(recognize(&star).mengerian);
    }
}
