//! Mengerian-ness by brute force over timefunctions.
//!
//! A multigraph is Mengerian when `p(s,z) = c(s,z)` for every timefunction and
//! every pair. Only the relative order of labels matters, so it suffices to
//! try every ordered set partition of the edges (parallel edges in distinct
//! classes). For a fixed pair only the multiedges lying on some simple `s`-`z`
//! path of `U(G)` can carry a temporal path, so the check runs on that
//! relevant subgraph and is memoized by its canonical form with `{s, z}` held
//! on the first two positions. Time reversal swaps the roles of `s` and `z`,
//! so unordered pairs suffice.

use std::collections::{BTreeSet, HashMap};

use super::canon::{canonical_edges, CanonForm};
use super::max_disjoint;
use crate::error::{Error, Result};
use crate::graph::{Label, TemporalGraph, Vertex};
use crate::multigraph::{LabelPattern, MGraph};

/// Relevant subgraphs larger than this are refused (permutation canonicalization).
pub const MAX_RELEVANT_VERTICES: usize = 8;

/// A timefunction witnessing `p < c`.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub graph: TemporalGraph,
    pub s: Vertex,
    pub z: Vertex,
    pub p: usize,
    pub c: usize,
}

#[derive(Clone, Debug)]
struct Found {
    // labels per canonical edge, same order as the form's edge list
    labels: Vec<Vec<Label>>,
    p: usize,
    c: usize,
}

#[derive(Default)]
pub struct SemanticOracle {
    cache: HashMap<CanonForm, Option<Found>>,
    /// Timefunctions evaluated so far (cache misses only).
    pub patterns_checked: u64,
}

impl SemanticOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_mengerian(&mut self, g: &MGraph) -> Result<bool> {
        Ok(self.counterexample(g)?.is_none())
    }

    /// The first pair and timefunction (in a fixed order) with `p < c`, if any.
    pub fn counterexample(&mut self, g: &MGraph) -> Result<Option<Counterexample>> {
        let n = g.vertex_count();
        for s in 0..n {
            for z in s + 1..n {
                if let Some(found) = self.check_pair(g, s, z)? {
                    return Ok(Some(found));
                }
            }
        }
        Ok(None)
    }

    fn check_pair(&mut self, g: &MGraph, s: Vertex, z: Vertex) -> Result<Option<Counterexample>> {
        let relevant = relevant_multiedges(g, s, z);
        if relevant.is_empty() {
            return Ok(None);
        }
        let verts: Vec<Vertex> = relevant
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if verts.len() > MAX_RELEVANT_VERTICES {
            return Err(Error::LimitExceeded {
                limit: MAX_RELEVANT_VERTICES,
            });
        }
        let local = |v: Vertex| verts.binary_search(&v).unwrap();
        let edges: Vec<(usize, usize, usize)> = relevant
            .iter()
            .map(|&(a, b)| (local(a), local(b), g.multiplicity(a, b)))
            .collect();
        let (form, perm) = canonical_edges(verts.len(), &edges, &[local(s), local(z)]);
        let found = match self.cache.get(&form) {
            Some(hit) => hit.clone(),
            None => {
                let (result, checked) = search_form(&form);
                self.patterns_checked += checked;
                self.cache.insert(form.clone(), result.clone());
                result
            }
        };
        let Some(found) = found else { return Ok(None) };

        // translate back: canonical position -> global vertex
        let mut global = vec![0; verts.len()];
        for (l, &v) in verts.iter().enumerate() {
            global[perm[l]] = v;
        }
        let mut pattern = LabelPattern::new();
        for (i, &(a, b, _)) in form.edges.iter().enumerate() {
            let (x, y) = (global[a as usize], global[b as usize]);
            pattern.insert((x.min(y), x.max(y)), found.labels[i].clone());
        }
        let mut next = found.labels.iter().flatten().max().copied().unwrap_or(0) + 1;
        for ((a, b), m) in g.multiedges() {
            pattern.entry((a, b)).or_insert_with(|| {
                let labels = (next..next + m as Label).collect();
                next += m as Label;
                labels
            });
        }
        Ok(Some(Counterexample {
            graph: g.labeled(&pattern)?,
            s: global[0],
            z: global[1],
            p: found.p,
            c: found.c,
        }))
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }
}

/// Multiedges on at least one simple `s`-`z` path of `U(G)`.
pub fn relevant_multiedges(g: &MGraph, s: Vertex, z: Vertex) -> BTreeSet<(Vertex, Vertex)> {
    let adj = g.adjacency(1);
    let mut out = BTreeSet::new();
    let mut on_path = vec![false; g.vertex_count()];
    let mut stack = vec![s];
    on_path[s] = true;
    fn dfs(
        adj: &[Vec<Vertex>],
        z: Vertex,
        stack: &mut Vec<Vertex>,
        on_path: &mut [bool],
        out: &mut BTreeSet<(Vertex, Vertex)>,
    ) {
        let x = *stack.last().unwrap();
        if x == z {
            for w in stack.windows(2) {
                out.insert((w[0].min(w[1]), w[0].max(w[1])));
            }
            return;
        }
        for &y in &adj[x] {
            if !on_path[y] {
                on_path[y] = true;
                stack.push(y);
                dfs(adj, z, stack, on_path, out);
                stack.pop();
                on_path[y] = false;
            }
        }
    }
    dfs(&adj, z, &mut stack, &mut on_path, &mut out);
    out
}

// Simple vertex paths from 0 to 1, as sequences of edge indices into `form.edges`.
fn edge_paths(form: &CanonForm) -> Vec<Vec<usize>> {
    let n = form.vertices;
    let mut adj = vec![Vec::new(); n];
    for (i, &(a, b, _)) in form.edges.iter().enumerate() {
        adj[a as usize].push((b as usize, i));
        adj[b as usize].push((a as usize, i));
    }
    let mut out = Vec::new();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut path = Vec::new();
    fn dfs(adj: &[Vec<(usize, usize)>], x: usize, seen: &mut [bool], path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if x == 1 {
            out.push(path.clone());
            return;
        }
        for &(y, e) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                path.push(e);
                dfs(adj, y, seen, path, out);
                path.pop();
                seen[y] = false;
            }
        }
    }
    dfs(&adj, 0, &mut seen, &mut path, &mut out);
    out
}

// Tries every ordered set partition; returns the first failure and the number tried.
fn search_form(form: &CanonForm) -> (Option<Found>, u64) {
    let paths = edge_paths(form);
    let mut slots = Vec::new();
    for (i, &(_, _, m)) in form.edges.iter().enumerate() {
        slots.extend(std::iter::repeat_n(i, m as usize));
    }
    let mut search = PatternSearch {
        form,
        paths,
        slots,
        labels: Vec::new(),
        used: Vec::new(),
        checked: 0,
        subsets: Vec::new(),
    };
    let found = search.assign(0);
    (found, search.checked)
}

struct PatternSearch<'a> {
    form: &'a CanonForm,
    paths: Vec<Vec<usize>>,
    slots: Vec<usize>,
    labels: Vec<Label>,
    // used[t - 1]: how many slots carry label t
    used: Vec<usize>,
    checked: u64,
    // subsets[L]: masks over L labels ordered by popcount
    subsets: Vec<Vec<u32>>,
}

impl PatternSearch<'_> {
    fn assign(&mut self, i: usize) -> Option<Found> {
        let n = self.slots.len();
        let max = self.used.iter().rposition(|&c| c > 0).map_or(0, |p| p + 1);
        let gaps = self.used[..max].iter().filter(|&&c| c == 0).count();
        if gaps > n - i {
            return None;
        }
        if i == n {
            if gaps > 0 {
                return None;
            }
            self.checked += 1;
            return self.evaluate(max);
        }
        // parallel edges take strictly increasing labels
        let floor = if i > 0 && self.slots[i - 1] == self.slots[i] {
            self.labels[i - 1] + 1
        } else {
            1
        };
        for t in floor..=n as Label {
            if self.used.len() < t as usize {
                self.used.resize(t as usize, 0);
            }
            self.used[t as usize - 1] += 1;
            self.labels.push(t);
            let found = self.assign(i + 1);
            self.labels.pop();
            self.used[t as usize - 1] -= 1;
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn evaluate(&mut self, lmax: usize) -> Option<Found> {
        // labels per edge
        let mut per_edge: Vec<Vec<Label>> = vec![Vec::new(); self.form.edges.len()];
        for (k, &e) in self.slots.iter().enumerate() {
            per_edge[e].push(self.labels[k]);
        }
        let mut masks = BTreeSet::new();
        for path in &self.paths {
            collect_masks(path, &per_edge, 0, 0, 0, &mut masks);
        }
        let masks: Vec<u32> = masks.into_iter().collect();
        let minimal: Vec<u32> = masks
            .iter()
            .copied()
            .filter(|&m| !masks.iter().any(|&o| o != m && o & m == o))
            .collect();
        while self.subsets.len() <= lmax {
            let l = self.subsets.len();
            let mut all: Vec<u32> = (0..1u32 << l).collect();
            all.sort_by_key(|m| (m.count_ones(), *m));
            self.subsets.push(all);
        }
        let c = self.subsets[lmax]
            .iter()
            .find(|&&cut| minimal.iter().all(|&m| m & cut != 0))
            .map_or(0, |m| m.count_ones() as usize);
        let wide: Vec<u128> = minimal.iter().map(|&m| m as u128).collect();
        let p = max_disjoint(&wide).len();
        (p < c).then_some(Found { labels: per_edge, p, c })
    }
}

// Label sets of temporal paths following the edge sequence `path`.
fn collect_masks(path: &[usize], per_edge: &[Vec<Label>], at: usize, last: Label, mask: u32, out: &mut BTreeSet<u32>) {
    if at == path.len() {
        out.insert(mask);
        return;
    }
    for &t in &per_edge[path[at]] {
        if t >= last {
            collect_masks(path, per_edge, at + 1, t, mask | 1 << (t - 1), out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mengerian::catalog::{self, MinorName};
    use crate::oracles::{brute_force_c, brute_force_p, PATH_LIMIT};

    #[test]
    fn small_graphs_are_mengerian() {
        let mut o = SemanticOracle::new();
        let tri = MGraph::from_multiedges(&[("a", "b", 1), ("b", "c", 1), ("c", "a", 1)]).unwrap();
        assert!(o.is_mengerian(&tri).unwrap());
        let c4 = MGraph::from_multiedges(&[("a", "b", 1), ("b", "c", 1), ("c", "d", 1), ("d", "a", 1)]).unwrap();
        assert!(o.is_mengerian(&c4).unwrap());
        let fat = MGraph::from_multiedges(&[("a", "b", 3), ("b", "c", 2)]).unwrap();
        assert!(o.is_mengerian(&fat).unwrap());
    }

    #[test]
    fn catalog_patterns_fail_and_witnesses_check_out() {
        let mut o = SemanticOracle::new();
        for name in MinorName::ALL {
            let ce = o
                .counterexample(&catalog::pattern(name))
                .unwrap()
                .expect("non-Mengerian");
            let p = brute_force_p(&ce.graph, ce.s, ce.z, PATH_LIMIT).unwrap().value;
            let c = brute_force_c(&ce.graph, ce.s, ce.z, PATH_LIMIT).unwrap().value;
            assert_eq!((p, c), (ce.p, ce.c), "{name}");
            assert!(p < c);
        }
    }

    #[test]
    fn relevant_subgraph_skips_pendant_edges() {
        let g = MGraph::from_multiedges(&[("s", "a", 1), ("a", "z", 1), ("a", "q", 2)]).unwrap();
        let rel = relevant_multiedges(&g, 0, 2);
        assert_eq!(rel.len(), 2);
    }
}
