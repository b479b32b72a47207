//! k snapshot-disjoint temporal paths through the product digraph.
//!
//! Every edge of `G` plus two sentinels (`SRC` before time and `SNK` after the
//! lifetime) forms the step alphabet. A product vertex is a k-tuple of steps
//! in which no two coordinates share a timestep (sentinels may coincide). A
//! coordinate may only advance when it holds the smallest timestep of the
//! tuple, and only along the successor relation `M` (shared endpoint,
//! non-decreasing label). `(SRC,..,SRC)` reaches `(SNK,..,SNK)` exactly when k
//! snapshot-disjoint paths exist.
//!
//! [`max_snapshot_disjoint`] explores the product lazily from the start tuple;
//! [`build_product`] materializes all of it, which is only sensible for tiny
//! inputs and exists for inspection and DOT output.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Label, TemporalGraph, Vertex};
use crate::walk::TemporalWalk;

/// Default cap on product vertices.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Product digraphs above this size are not drawn.
pub const DOT_LIMIT: usize = 500;

/// Steps are encoded as `SRC = 0`, edge `e` as `e + 1`, `SNK = m + 1`.
pub type Step = u32;

#[derive(Clone, Debug)]
pub struct StepAlphabet {
    m: usize,
    hat: Vec<u64>,
}

impl StepAlphabet {
    pub fn new(g: &TemporalGraph) -> Self {
        let m = g.edge_count();
        let tau = g.lifetime() as u64;
        let mut hat = Vec::with_capacity(m + 2);
        hat.push(0);
        hat.extend(g.edges().iter().map(|e| e.label as u64));
        hat.push(tau + 1);
        Self { m, hat }
    }

    pub const SRC: Step = 0;

    pub fn snk(&self) -> Step {
        self.m as Step + 1
    }

    pub fn len(&self) -> usize {
        self.m + 2
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Extended label: 0 for `SRC`, `τ + 1` for `SNK`.
    pub fn hat(&self, x: Step) -> u64 {
        self.hat[x as usize]
    }

    pub fn is_sentinel(&self, x: Step) -> bool {
        x == Self::SRC || x == self.snk()
    }

    pub fn edge(&self, x: Step) -> Option<usize> {
        (!self.is_sentinel(x)).then(|| x as usize - 1)
    }

    pub fn describe(&self, g: &TemporalGraph, x: Step) -> String {
        match self.edge(x) {
            None if x == Self::SRC => "SRC".into(),
            None => "SNK".into(),
            Some(e) => {
                let e = g.edge(e);
                format!("{}{}@{}", g.name(e.u), g.name(e.v), e.label)
            }
        }
    }
}

/// The relation `M` as successor lists, sorted by step.
#[derive(Clone, Debug)]
pub struct SuccessorRelation {
    succ: Vec<Vec<Step>>,
}

impl SuccessorRelation {
    pub fn new(g: &TemporalGraph, s: Vertex, z: Vertex, alpha: &StepAlphabet) -> Self {
        let m = g.edge_count();
        let mut succ = vec![Vec::new(); m + 2];
        succ[0] = (0..m)
            .filter(|&e| g.edge(e).is_incident(s))
            .map(|e| e as Step + 1)
            .collect();
        for e in 0..m {
            let ee = g.edge(e);
            let list = &mut succ[e + 1];
            for f in 0..m {
                let ff = g.edge(f);
                if ee.shares_endpoint(ff) && ee.label <= ff.label {
                    list.push(f as Step + 1);
                }
            }
            if ee.is_incident(z) {
                list.push(alpha.snk());
            }
        }
        Self { succ }
    }

    pub fn successors(&self, x: Step) -> &[Step] {
        &self.succ[x as usize]
    }

    pub fn contains(&self, x: Step, y: Step) -> bool {
        self.succ[x as usize].binary_search(&y).is_ok()
    }
}

fn check_args(g: &TemporalGraph, s: Vertex, z: Vertex, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    if s == z {
        return Err(Error::InvalidInput("s and z must differ".into()));
    }
    if s >= g.vertex_count() || z >= g.vertex_count() {
        return Err(Error::UnknownVertex(format!("#{}", s.max(z))));
    }
    Ok(())
}

/// `(m + 2)^k`, saturating.
pub fn tuple_bound(m: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, _| acc.saturating_mul(m as u128 + 2))
}

fn is_member(alpha: &StepAlphabet, t: &[Step]) -> bool {
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            let same_sentinel = t[i] == t[j] && alpha.is_sentinel(t[i]);
            if alpha.hat(t[i]) == alpha.hat(t[j]) && !same_sentinel {
                return false;
            }
        }
    }
    true
}

// Arcs leaving `t` in the fixed order: position ascending, then successor ascending.
fn for_each_arc(alpha: &StepAlphabet, rel: &SuccessorRelation, t: &[Step], mut f: impl FnMut(usize, Step)) {
    let min = t.iter().map(|&x| alpha.hat(x)).min().unwrap_or(0);
    for i in 0..t.len() {
        if alpha.hat(t[i]) != min {
            continue;
        }
        'next: for &y in rel.successors(t[i]) {
            if y == t[i] {
                continue;
            }
            for (j, &other) in t.iter().enumerate() {
                if j != i && alpha.hat(other) == alpha.hat(y) && !(other == y && alpha.is_sentinel(y)) {
                    continue 'next;
                }
            }
            f(i, y);
        }
    }
}

/// The fully materialized product digraph.
#[derive(Clone, Debug)]
pub struct ProductDigraph {
    pub k: usize,
    pub alphabet: StepAlphabet,
    pub vertices: Vec<Vec<Step>>,
    pub arcs: Vec<(usize, usize)>,
    pub source: usize,
    pub sink: usize,
}

/// Materializes every product vertex and arc.
pub fn build_product(g: &TemporalGraph, s: Vertex, z: Vertex, k: usize, budget: u128) -> Result<ProductDigraph> {
    check_args(g, s, z, k)?;
    let alpha = StepAlphabet::new(g);
    let rel = SuccessorRelation::new(g, s, z, &alpha);
    let bound = tuple_bound(g.edge_count(), k);
    if bound > budget {
        return Err(Error::BudgetExceeded { budget, needed: bound });
    }
    let base = alpha.len() as Step;
    let mut vertices = Vec::new();
    let mut index = HashMap::new();
    let mut t = vec![0 as Step; k];
    'odometer: loop {
        if is_member(&alpha, &t) {
            index.insert(t.clone(), vertices.len());
            vertices.push(t.clone());
        }
        let mut i = k;
        loop {
            if i == 0 {
                break 'odometer;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < base {
                break;
            }
            t[i] = 0;
        }
    }
    let mut arcs = Vec::new();
    for (a, t) in vertices.iter().enumerate() {
        for_each_arc(&alpha, &rel, t, |i, y| {
            let mut u = t.clone();
            u[i] = y;
            arcs.push((a, index[&u]));
        });
    }
    let source = index[&vec![StepAlphabet::SRC; k]];
    let sink = index[&vec![alpha.snk(); k]];
    Ok(ProductDigraph {
        k,
        alphabet: alpha,
        vertices,
        arcs,
        source,
        sink,
    })
}

impl ProductDigraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Whether the sink tuple is reachable from the source tuple.
    pub fn sink_reachable(&self) -> bool {
        let mut out = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.arcs {
            out[a].push(b);
        }
        let mut seen = vec![false; self.vertices.len()];
        seen[self.source] = true;
        let mut queue = VecDeque::from([self.source]);
        while let Some(a) = queue.pop_front() {
            for &b in &out[a] {
                if !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        seen[self.sink]
    }

    pub fn to_dot(&self, g: &TemporalGraph) -> Result<String> {
        if self.vertices.len() >= DOT_LIMIT {
            return Err(Error::LimitExceeded { limit: DOT_LIMIT });
        }
        let name = |t: &[Step]| {
            let parts: Vec<String> = t.iter().map(|&x| self.alphabet.describe(g, x)).collect();
            format!("\"({})\"", parts.join(","))
        };
        let mut out = String::from("digraph product {\n");
        for (i, t) in self.vertices.iter().enumerate() {
            let shape = if i == self.source || i == self.sink {
                " [shape=box]"
            } else {
                ""
            };
            let _ = writeln!(out, "  {}{};", name(t), shape);
        }
        for &(a, b) in &self.arcs {
            let _ = writeln!(out, "  {} -> {};", name(&self.vertices[a]), name(&self.vertices[b]));
        }
        out.push_str("}\n");
        Ok(out)
    }
}

#[derive(Clone, Debug)]
pub struct DisjointOutcome {
    pub found: bool,
    /// k pairwise snapshot-disjoint paths when `found`.
    pub paths: Vec<TemporalWalk>,
    /// Product vertices discovered by the lazy search.
    pub visited: u64,
    /// `(m + 2)^k`.
    pub bound: u128,
}

/// Decides whether `k` snapshot-disjoint temporal `s`-`z` paths exist and
/// returns them. The budget caps the number of product vertices discovered.
pub fn max_snapshot_disjoint(
    g: &TemporalGraph,
    s: Vertex,
    z: Vertex,
    k: usize,
    budget: u128,
) -> Result<DisjointOutcome> {
    check_args(g, s, z, k)?;
    let alpha = StepAlphabet::new(g);
    let rel = SuccessorRelation::new(g, s, z, &alpha);
    let bound = tuple_bound(g.edge_count(), k);
    let start: Box<[Step]> = vec![StepAlphabet::SRC; k].into();
    let goal: Box<[Step]> = vec![alpha.snk(); k].into();

    let mut states: Vec<Box<[Step]>> = vec![start.clone()];
    let mut parent: Vec<u32> = vec![u32::MAX];
    let mut index: HashMap<Box<[Step]>, u32> = HashMap::from([(start, 0)]);
    let mut head = 0;
    let mut reached = None;
    while head < states.len() {
        let cur = states[head].clone();
        if cur == goal {
            reached = Some(head);
            break;
        }
        let mut fresh = Vec::new();
        for_each_arc(&alpha, &rel, &cur, |i, y| {
            let mut next = cur.clone();
            next[i] = y;
            fresh.push(next);
        });
        for next in fresh {
            if index.contains_key(&next) {
                continue;
            }
            if states.len() as u128 >= budget {
                return Err(Error::BudgetExceeded {
                    budget,
                    needed: states.len() as u128 + 1,
                });
            }
            index.insert(next.clone(), states.len() as u32);
            states.push(next);
            parent.push(head as u32);
        }
        head += 1;
    }
    let visited = states.len() as u64;
    let Some(end) = reached else {
        return Ok(DisjointOutcome {
            found: false,
            paths: Vec::new(),
            visited,
            bound,
        });
    };
    let mut chain = vec![end];
    while parent[*chain.last().unwrap()] != u32::MAX {
        chain.push(parent[*chain.last().unwrap()] as usize);
    }
    chain.reverse();
    let paths: Vec<TemporalWalk> = (0..k)
        .map(|i| {
            let mut seq: Vec<usize> = Vec::new();
            for &st in &chain {
                if let Some(e) = alpha.edge(states[st][i]) {
                    if seq.last() != Some(&e) {
                        seq.push(e);
                    }
                }
            }
            path_within(g, s, z, &seq)
        })
        .collect();
    debug_assert!(crate::walk::is_snapshot_disjoint_family(g, s, z, &paths));
    Ok(DisjointOutcome {
        found: true,
        paths,
        visited,
        bound,
    })
}

/// A temporal `s`-`z` path using edges of `seq` in order. `seq` starts at `s`,
/// ends at `z`, has non-decreasing labels and consecutive edges share an
/// endpoint, which is all a product coordinate guarantees.
fn path_within(g: &TemporalGraph, s: Vertex, z: Vertex, seq: &[usize]) -> TemporalWalk {
    let mut via: Vec<Option<usize>> = vec![None; g.vertex_count()];
    let mut reached = vec![false; g.vertex_count()];
    reached[s] = true;
    for &e in seq {
        let edge = g.edge(e);
        for (a, b) in [(edge.u, edge.v), (edge.v, edge.u)] {
            if reached[a] && !reached[b] {
                reached[b] = true;
                via[b] = Some(e);
            }
        }
    }
    let mut vertices = vec![z];
    let mut edges = Vec::new();
    let mut cur = z;
    while cur != s {
        let e = via[cur].expect("every coordinate sequence connects s to z");
        edges.push(e);
        cur = g.edge(e).other(cur).unwrap();
        vertices.push(cur);
    }
    vertices.reverse();
    edges.reverse();
    TemporalWalk { vertices, edges }
}

/// Labels of the returned paths, for reporting.
pub fn label_sets(g: &TemporalGraph, paths: &[TemporalWalk]) -> Vec<Vec<Label>> {
    paths.iter().map(|p| p.label_set(g).into_iter().collect()).collect()
}

/// Largest `k` with a YES answer, searching upward from 1.
pub fn max_family(g: &TemporalGraph, s: Vertex, z: Vertex, budget: u128) -> Result<DisjointOutcome> {
    let mut best = DisjointOutcome {
        found: false,
        paths: Vec::new(),
        visited: 0,
        bound: 1,
    };
    for k in 1.. {
        let out = max_snapshot_disjoint(g, s, z, k, budget)?;
        if !out.found {
            best.visited += out.visited;
            return Ok(best);
        }
        best = out;
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::walk::is_snapshot_disjoint_family;

    fn sz(g: &TemporalGraph) -> (Vertex, Vertex) {
        (g.vertex("s").unwrap(), g.vertex("z").unwrap())
    }

    #[test]
    fn fig7_product_drops_conflicting_tuples() {
        let g = fixtures::fig7();
        let (s, z) = sz(&g);
        let d = build_product(&g, s, z, 2, DEFAULT_BUDGET).unwrap();
        for e in 1..=5 {
            assert!(!d.vertices.contains(&vec![e, e]));
        }
        let az2 = g.find_edge(g.vertex("a").unwrap(), z, 2).unwrap() as Step + 1;
        let sb2 = g.find_edge(s, g.vertex("b").unwrap(), 2).unwrap() as Step + 1;
        assert!(!d.vertices.contains(&vec![az2, sb2]));
        assert!(!d.vertices.contains(&vec![sb2, az2]));
        assert!(d.vertex_count() as u128 <= tuple_bound(5, 2));
        assert!(d.sink_reachable());
        // coordinates never move backwards in time
        for &(a, b) in &d.arcs {
            for i in 0..2 {
                assert!(d.alphabet.hat(d.vertices[a][i]) <= d.alphabet.hat(d.vertices[b][i]));
            }
        }
        assert!(d.to_dot(&g).unwrap().contains("->"));
    }

    #[test]
    fn fig7_two_paths() {
        let g = fixtures::fig7();
        let (s, z) = sz(&g);
        let out = max_snapshot_disjoint(&g, s, z, 2, DEFAULT_BUDGET).unwrap();
        assert!(out.found);
        let mut sets = label_sets(&g, &out.paths);
        sets.sort();
        assert_eq!(sets, vec![vec![1, 3], vec![2, 4]]);
        assert!(!max_snapshot_disjoint(&g, s, z, 3, DEFAULT_BUDGET).unwrap().found);
    }

    #[test]
    fn fig1a_two_paths_fig1b_one() {
        let g = fixtures::fig1a();
        let (s, z) = sz(&g);
        let out = max_snapshot_disjoint(&g, s, z, 2, DEFAULT_BUDGET).unwrap();
        assert!(out.found);
        assert!(is_snapshot_disjoint_family(&g, s, z, &out.paths));

        let g = fixtures::fig1b();
        let (s, z) = sz(&g);
        assert!(max_snapshot_disjoint(&g, s, z, 1, DEFAULT_BUDGET).unwrap().found);
        assert!(!max_snapshot_disjoint(&g, s, z, 2, DEFAULT_BUDGET).unwrap().found);
        assert!(!build_product(&g, s, z, 2, DEFAULT_BUDGET).unwrap().sink_reachable());
    }

    #[test]
    fn budget_is_enforced() {
        let g = fixtures::fig1a();
        let (s, z) = sz(&g);
        assert!(matches!(
            max_snapshot_disjoint(&g, s, z, 3, 5),
            Err(Error::BudgetExceeded { budget: 5, .. })
        ));
        assert!(matches!(
            build_product(&g, s, z, 3, 100),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn arguments_are_checked() {
        let g = fixtures::fig7();
        assert!(max_snapshot_disjoint(&g, 0, 0, 1, 10).is_err());
        assert!(max_snapshot_disjoint(&g, 0, 3, 0, 10).is_err());
    }

    #[test]
    fn extraction_handles_sibling_steps() {
        // two edges at s in a row in one coordinate: s-a@1 then s-b@1 is allowed by M
        let g = TemporalGraph::from_triples(&[("s", "a", 1), ("s", "b", 1), ("b", "z", 2)]).unwrap();
        let p = path_within(&g, 0, 3, &[0, 1, 2]);
        assert_eq!(p.vertices, vec![0, 2, 3]);
        assert!(p.check(&g).is_ok());
    }

    #[test]
    fn max_family_on_fixtures() {
        let g = fixtures::fig1a();
        let (s, z) = sz(&g);
        assert_eq!(max_family(&g, s, z, DEFAULT_BUDGET).unwrap().paths.len(), 2);
    }
}
