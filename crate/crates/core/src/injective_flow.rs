//! Edge-disjoint temporal paths by max-flow, and `p = c` for injective timefunctions.
//!
//! The time-expanded network has a node `(v, i)` per vertex and distinct
//! label `t_i`, with unbounded waiting arcs `(v, i) -> (v, i + 1)`. A temporal
//! edge `uv` at `t_i` becomes a two-node gadget `in -> out` of capacity one,
//! entered from `(u, i)` or `(v, i)` and left towards either, so the edge is
//! used at most once in either direction. The source feeds `(s, 0)` and every
//! `(z, i)` drains to the sink.
//!
//! With an injective timefunction snapshot-disjoint means edge-disjoint and a
//! snapshot cut is the label set of an edge cut, so both `p` and `c` equal the
//! flow value.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Label, TemporalGraph, Vertex};
use crate::walk::TemporalWalk;

const INF: i64 = i64::MAX / 4;

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: i64,
    flow: i64,
}

/// Dinic's algorithm on an adjacency list with paired reverse arcs.
#[derive(Clone, Debug, Default)]
pub struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        Self {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    pub fn node_count(&self) -> usize {
        self.out.len()
    }

    /// Adds an arc and returns its index.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap, flow: 0 });
        self.out[from].push(id);
        self.arcs.push(Arc {
            to: from,
            cap: 0,
            flow: 0,
        });
        self.out[to].push(id + 1);
        id
    }

    fn residual(&self, a: usize) -> i64 {
        self.arcs[a].cap - self.arcs[a].flow
    }

    fn levels(&self, s: usize) -> Vec<usize> {
        let mut level = vec![usize::MAX; self.out.len()];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.out[x] {
                let y = self.arcs[a].to;
                if self.residual(a) > 0 && level[y] == usize::MAX {
                    level[y] = level[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        level
    }

    fn push(&mut self, x: usize, t: usize, limit: i64, level: &[usize], next: &mut [usize]) -> i64 {
        if x == t {
            return limit;
        }
        while next[x] < self.out[x].len() {
            let a = self.out[x][next[x]];
            let y = self.arcs[a].to;
            if self.residual(a) > 0 && level[y] == level[x] + 1 {
                let pushed = self.push(y, t, limit.min(self.residual(a)), level, next);
                if pushed > 0 {
                    self.arcs[a].flow += pushed;
                    self.arcs[a ^ 1].flow -= pushed;
                    return pushed;
                }
            }
            next[x] += 1;
        }
        0
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        loop {
            let level = self.levels(s);
            if level[t] == usize::MAX {
                return total;
            }
            let mut next = vec![0; self.out.len()];
            loop {
                let pushed = self.push(s, t, INF, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    /// Nodes reachable from `s` in the residual network.
    pub fn source_side(&self, s: usize) -> Vec<bool> {
        self.levels(s).iter().map(|&l| l != usize::MAX).collect()
    }

    // A simple s-t path over arcs carrying positive flow; the flow on it is removed.
    fn take_flow_path(&mut self, s: usize, t: usize) -> Option<Vec<usize>> {
        let mut via = vec![usize::MAX; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.out[x] {
                let y = self.arcs[a].to;
                if a % 2 == 0 && self.arcs[a].flow > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = a;
                    queue.push_back(y);
                }
            }
        }
        if !seen[t] {
            return None;
        }
        let mut nodes = vec![t];
        let mut cur = t;
        while cur != s {
            let a = via[cur];
            self.arcs[a].flow -= 1;
            self.arcs[a ^ 1].flow += 1;
            cur = self.arcs[a ^ 1].to;
            nodes.push(cur);
        }
        nodes.reverse();
        Some(nodes)
    }
}

/// The time-expanded network of a temporal graph for a pair `s`, `z`.
#[derive(Clone, Debug)]
pub struct TimeExpandedNetwork {
    pub network: FlowNetwork,
    pub layers: Vec<Label>,
    pub source: usize,
    pub sink: usize,
    n: usize,
    // gadget arc (in -> out) per temporal edge
    gadget: Vec<usize>,
    edge_base: usize,
}

impl TimeExpandedNetwork {
    pub fn new(g: &TemporalGraph, s: Vertex, z: Vertex) -> Self {
        let layers: Vec<Label> = g.labels().into_iter().collect();
        let n = g.vertex_count();
        let l = layers.len().max(1);
        let edge_base = n * l;
        let source = edge_base + 2 * g.edge_count();
        let sink = source + 1;
        let mut network = FlowNetwork::new(sink + 1);
        let node = |v: Vertex, i: usize| v * l + i;
        for v in 0..n {
            for i in 0..l - 1 {
                network.add_arc(node(v, i), node(v, i + 1), INF);
            }
        }
        let mut gadget = Vec::with_capacity(g.edge_count());
        for (e, edge) in g.edges().iter().enumerate() {
            let i = layers.binary_search(&edge.label).unwrap();
            let (ein, eout) = (edge_base + 2 * e, edge_base + 2 * e + 1);
            for v in [edge.u, edge.v] {
                network.add_arc(node(v, i), ein, INF);
                network.add_arc(eout, node(v, i), INF);
            }
            gadget.push(network.add_arc(ein, eout, 1));
        }
        network.add_arc(source, node(s, 0), INF);
        for i in 0..l {
            network.add_arc(node(z, i), sink, INF);
        }
        Self {
            network,
            layers,
            source,
            sink,
            n,
            gadget,
            edge_base,
        }
    }

    fn vertex_of(&self, node: usize) -> Option<Vertex> {
        (node < self.edge_base)
            .then(|| node / self.layers.len().max(1))
            .filter(|&v| v < self.n)
    }

    fn edge_of(&self, node: usize) -> Option<usize> {
        (node >= self.edge_base && node < self.source && (node - self.edge_base).is_multiple_of(2))
            .then(|| (node - self.edge_base) / 2)
    }
}

#[derive(Clone, Debug)]
pub struct EdgeDisjointPaths {
    pub value: usize,
    /// Pairwise edge-disjoint temporal paths.
    pub paths: Vec<TemporalWalk>,
    /// A minimum set of edges meeting every temporal path.
    pub edge_cut: Vec<usize>,
}

/// Maximum number of edge-disjoint temporal `s`-`z` paths, with a matching edge cut.
pub fn max_edge_disjoint_paths(g: &TemporalGraph, s: Vertex, z: Vertex) -> Result<EdgeDisjointPaths> {
    if s == z {
        return Err(Error::InvalidInput("s and z must differ".into()));
    }
    if s >= g.vertex_count() || z >= g.vertex_count() {
        return Err(Error::UnknownVertex(format!("#{}", s.max(z))));
    }
    let mut net = TimeExpandedNetwork::new(g, s, z);
    let value = net.network.max_flow(net.source, net.sink) as usize;
    let side = net.network.source_side(net.source);
    let edge_cut: Vec<usize> = (0..g.edge_count())
        .filter(|&e| {
            let a = net.gadget[e];
            let ein = net.edge_base + 2 * e;
            side[ein] && !side[net.network.arcs[a].to]
        })
        .collect();
    let mut paths = Vec::with_capacity(value);
    while let Some(nodes) = net.network.take_flow_path(net.source, net.sink) {
        let mut vertices = vec![s];
        let mut edges = Vec::new();
        for &x in &nodes {
            if let Some(e) = net.edge_of(x) {
                let from = *vertices.last().unwrap();
                let to = g.edge(e).other(from).expect("gadget entered from an endpoint");
                edges.push(e);
                vertices.push(to);
            } else if let Some(v) = net.vertex_of(x) {
                debug_assert_eq!(v, *vertices.last().unwrap());
            }
        }
        let walk = TemporalWalk { vertices, edges }.shortcut();
        paths.push(walk);
    }
    debug_assert_eq!(paths.len(), value);
    debug_assert_eq!(edge_cut.len(), value);
    Ok(EdgeDisjointPaths { value, paths, edge_cut })
}

#[derive(Clone, Debug)]
pub struct InjectiveConnectivity {
    pub p: usize,
    pub c: usize,
    pub paths: Vec<TemporalWalk>,
    pub cut: BTreeSet<Label>,
}

/// `p` and `c` for an injective timefunction, where both equal the number of
/// edge-disjoint temporal paths.
pub fn injective_connectivity(g: &TemporalGraph, s: Vertex, z: Vertex) -> Result<InjectiveConnectivity> {
    if let Some(t) = g.repeated_label() {
        return Err(Error::NotInjective(t));
    }
    let flow = max_edge_disjoint_paths(g, s, z)?;
    let cut = flow.edge_cut.iter().map(|&e| g.label(e)).collect();
    Ok(InjectiveConnectivity {
        p: flow.value,
        c: flow.value,
        paths: flow.paths,
        cut,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts::is_snapshot_cut;
    use crate::fixtures;
    use crate::walk::{pairwise_edge_disjoint, pairwise_snapshot_disjoint};

    fn sz(g: &TemporalGraph) -> (Vertex, Vertex) {
        (g.vertex("s").unwrap(), g.vertex("z").unwrap())
    }

    #[test]
    fn fig1b_has_two_edge_disjoint_paths() {
        let g = fixtures::fig1b();
        let (s, z) = sz(&g);
        let r = max_edge_disjoint_paths(&g, s, z).unwrap();
        assert_eq!(r.value, 2);
        assert!(pairwise_edge_disjoint(&r.paths));
        for p in &r.paths {
            p.check(&g).unwrap();
            assert!(p.is_path());
        }
    }

    #[test]
    fn fig1a_edge_disjoint_family() {
        let g = fixtures::fig1a();
        let (s, z) = sz(&g);
        let r = max_edge_disjoint_paths(&g, s, z).unwrap();
        assert!(r.value >= 2);
        assert!(pairwise_edge_disjoint(&r.paths));
        assert!(r.paths.iter().all(|p| p.check(&g).is_ok() && p.target() == z));
    }

    #[test]
    fn two_edge_paths() {
        let up = TemporalGraph::from_triples(&[("s", "a", 1), ("a", "z", 2)]).unwrap();
        let r = injective_connectivity(&up, 0, 2).unwrap();
        assert_eq!((r.p, r.c), (1, 1));
        let down = TemporalGraph::from_triples(&[("s", "a", 2), ("a", "z", 1)]).unwrap();
        let r = injective_connectivity(&down, 0, 2).unwrap();
        assert_eq!((r.p, r.c), (0, 0));
        assert!(r.cut.is_empty());
    }

    #[test]
    fn edgeless_graph() {
        let mut g = TemporalGraph::new();
        g.add_vertex("s");
        g.add_vertex("z");
        assert_eq!(max_edge_disjoint_paths(&g, 0, 1).unwrap().value, 0);
    }

    #[test]
    fn repeated_labels_are_refused() {
        let g = fixtures::fig1b();
        assert!(matches!(injective_connectivity(&g, 0, 3), Err(Error::NotInjective(_))));
    }

    #[test]
    fn injective_cut_and_family() {
        let g = TemporalGraph::from_triples(&[
            ("s", "a", 1),
            ("a", "z", 4),
            ("s", "b", 2),
            ("b", "z", 5),
            ("a", "b", 3),
            ("s", "z", 6),
        ])
        .unwrap();
        let (s, z) = (0, 2);
        let r = injective_connectivity(&g, s, z).unwrap();
        assert_eq!(r.p, 3);
        assert!(pairwise_snapshot_disjoint(&g, &r.paths));
        assert!(is_snapshot_cut(&g, s, z, &r.cut));
    }
}
