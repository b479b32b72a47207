//! Canonical forms and exhaustive enumeration of small multigraphs.
//!
//! Canonical forms are computed by trying every vertex permutation, so they
//! are exact but only usable up to about eight vertices.

use std::collections::BTreeSet;

use crate::graph::Vertex;
use crate::multigraph::MGraph;

/// Sorted `(a, b, multiplicity)` triples under the lexicographically least relabeling.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonForm {
    pub vertices: usize,
    pub edges: Vec<(u8, u8, u8)>,
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

fn relabel(edges: &[(usize, usize, usize)], perm: &[usize]) -> Vec<(u8, u8, u8)> {
    let mut out: Vec<(u8, u8, u8)> = edges
        .iter()
        .map(|&(a, b, m)| {
            let (x, y) = (perm[a], perm[b]);
            (x.min(y) as u8, x.max(y) as u8, m as u8)
        })
        .collect();
    out.sort_unstable();
    out
}

/// Canonical form over the given vertices. With `keep_isolated` false,
/// vertices without edges are dropped first.
pub fn canonical_form(g: &MGraph, keep_isolated: bool) -> CanonForm {
    canonical_with_perm(g, keep_isolated).0
}

/// Canonical form plus the map from original vertex to canonical position
/// (`usize::MAX` for dropped isolated vertices).
pub fn canonical_with_perm(g: &MGraph, keep_isolated: bool) -> (CanonForm, Vec<usize>) {
    let keep: Vec<Vertex> = (0..g.vertex_count())
        .filter(|&v| keep_isolated || g.simple_degree(v) > 0)
        .collect();
    let mut local = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in keep.iter().enumerate() {
        local[v] = i;
    }
    let edges: Vec<(usize, usize, usize)> = g.multiedges().map(|((a, b), m)| (local[a], local[b], m)).collect();
    let (form, perm) = canonical_edges(keep.len(), &edges, &[]);
    let map = local
        .iter()
        .map(|&l| if l == usize::MAX { l } else { perm[l] })
        .collect();
    (form, map)
}

/// Least relabeling of an edge list on `n` vertices, where the vertices in
/// `fixed` must land, as a set, on positions `0..fixed.len()`.
// relabeled edge list and the permutation that produced it
type Candidate = (Vec<(u8, u8, u8)>, Vec<usize>);

pub(crate) fn canonical_edges(n: usize, edges: &[(usize, usize, usize)], fixed: &[usize]) -> (CanonForm, Vec<usize>) {
    let mut best: Option<Candidate> = None;
    for perm in permutations(n) {
        if fixed.iter().any(|&v| perm[v] >= fixed.len()) {
            continue;
        }
        let form = relabel(edges, &perm);
        if best.as_ref().is_none_or(|(b, _)| form < *b) {
            best = Some((form, perm));
        }
    }
    let (edges, perm) = best.unwrap_or_default();
    (CanonForm { vertices: n, edges }, perm)
}

/// One multigraph per isomorphism class with at most `max_vertices`
/// non-isolated vertices, between one and `max_edges` edges (counting
/// multiplicity) and no isolated vertices. Vertices are named `0, 1, ..`.
pub fn enumerate_multigraphs(max_vertices: usize, max_edges: usize) -> Vec<MGraph> {
    let n = max_vertices;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut seen = BTreeSet::new();
    let mut mult = vec![0usize; pairs.len()];
    distribute(&pairs, &mut mult, 0, max_edges, &mut |mult| {
        let edges: Vec<(usize, usize, usize)> = pairs
            .iter()
            .zip(mult)
            .filter(|(_, &m)| m > 0)
            .map(|(&(a, b), &m)| (a, b, m))
            .collect();
        if edges.is_empty() {
            return;
        }
        let mut g = MGraph::with_vertices(n);
        for &(a, b, m) in &edges {
            g.set_multiplicity(a, b, m);
        }
        seen.insert(canonical_form(&g, false));
    });
    seen.into_iter().map(|f| from_form(&f)).collect()
}

/// Simple graphs on exactly `n` vertices (isolated ones included), one per
/// isomorphism class.
pub fn enumerate_simple_graphs(n: usize) -> Vec<MGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut seen = BTreeSet::new();
    for bits in 0u64..1 << pairs.len() {
        let mut g = MGraph::with_vertices(n);
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if bits >> i & 1 == 1 {
                g.set_multiplicity(a, b, 1);
            }
        }
        seen.insert(canonical_form(&g, true));
    }
    seen.into_iter().map(|f| from_form(&f)).collect()
}

fn distribute(pairs: &[(usize, usize)], mult: &mut Vec<usize>, i: usize, left: usize, f: &mut dyn FnMut(&[usize])) {
    if i == pairs.len() {
        f(mult);
        return;
    }
    for m in 0..=left {
        mult[i] = m;
        distribute(pairs, mult, i + 1, left - m, f);
    }
    mult[i] = 0;
}

pub fn from_form(f: &CanonForm) -> MGraph {
    let mut g = MGraph::with_vertices(f.vertices);
    for &(a, b, m) in &f.edges {
        g.set_multiplicity(a as usize, b as usize, m as usize);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(0).len(), 1);
    }

    #[test]
    fn isomorphic_graphs_share_a_form() {
        let a = MGraph::from_multiedges(&[("x", "y", 2), ("y", "z", 1)]).unwrap();
        let b = MGraph::from_multiedges(&[("p", "q", 1), ("r", "p", 2)]).unwrap();
        assert_eq!(canonical_form(&a, false), canonical_form(&b, false));
        let c = MGraph::from_multiedges(&[("p", "q", 1), ("q", "r", 1)]).unwrap();
        assert_ne!(canonical_form(&a, false), canonical_form(&c, false));
    }

    #[test]
    fn simple_graph_counts_match_known_sequence() {
        // graphs on n unlabeled vertices: 1, 2, 4, 11, 34
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_simple_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn tiny_multigraph_census() {
        // at most 3 vertices, at most 2 edges: K2, K2 doubled, path P3
        assert_eq!(enumerate_multigraphs(3, 2).len(), 3);
    }
}
