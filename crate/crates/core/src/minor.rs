//! m-topological minor containment by exact search.
//!
//! `H` is an m-topological minor of `G` when some subgraph of `G` arises from
//! `H` by repeated m-subdivisions. Equivalently: the vertices of `H` map
//! injectively into `G`, and every multiedge `xy` of multiplicity μ maps to a
//! path between the images whose multiedges all have multiplicity at least μ,
//! with the paths internally disjoint from each other and from the images.
//!
//! The search is exponential; it is meant for the five forbidden patterns and
//! for desk-scale host graphs.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Vertex;
use crate::multigraph::MGraph;

/// Patterns larger than this are refused.
pub const MAX_PATTERN_VERTICES: usize = 6;

/// Where each pattern vertex and multiedge lands in the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorEmbedding {
    /// `branch[x]` is the host vertex representing pattern vertex `x`.
    pub branch: Vec<Vertex>,
    /// For each pattern multiedge `(x, y)` with multiplicity μ, the host path
    /// from `branch[x]` to `branch[y]`.
    pub routes: Vec<((Vertex, Vertex), usize, Vec<Vertex>)>,
}

impl MinorEmbedding {
    /// The image as a subgraph of `host`: each routed multiedge carries the
    /// pattern multiplicity. Host vertex names are preserved.
    pub fn image(&self, host: &MGraph) -> MGraph {
        let mut g = MGraph::new();
        for &b in &self.branch {
            g.add_vertex(host.name(b));
        }
        for (_, mult, path) in &self.routes {
            for w in path.windows(2) {
                let (a, b) = (g.add_vertex(host.name(w[0])), g.add_vertex(host.name(w[1])));
                g.set_multiplicity(a, b, *mult);
            }
        }
        g
    }
}

pub fn has_m_topological_minor(g: &MGraph, h: &MGraph) -> Result<bool> {
    Ok(find_m_topological_minor(g, h)?.is_some())
}

pub fn find_m_topological_minor(g: &MGraph, h: &MGraph) -> Result<Option<MinorEmbedding>> {
    if h.vertex_count() > MAX_PATTERN_VERTICES {
        return Err(Error::PatternTooLarge {
            vertices: h.vertex_count(),
        });
    }
    if h.vertex_count() > g.vertex_count() {
        return Ok(None);
    }
    let mut order: Vec<Vertex> = (0..h.vertex_count()).collect();
    order.sort_by_key(|&x| std::cmp::Reverse(h.simple_degree(x)));
    let pattern_edges: Vec<((Vertex, Vertex), usize)> = {
        let mut list: Vec<_> = h.multiedges().collect();
        // route high-multiplicity edges first, they are the most constrained
        list.sort_by_key(|&(_, m)| std::cmp::Reverse(m));
        list
    };
    let mut search = Search {
        g,
        h,
        adj: (1..=pattern_edges.iter().map(|e| e.1).max().unwrap_or(1))
            .map(|m| g.adjacency(m))
            .collect(),
        order,
        pattern_edges,
        branch: vec![usize::MAX; h.vertex_count()],
        used: vec![false; g.vertex_count()],
        routes: Vec::new(),
    };
    Ok(if search.assign(0) {
        Some(MinorEmbedding {
            branch: search.branch,
            routes: search.routes,
        })
    } else {
        None
    })
}

struct Search<'a> {
    g: &'a MGraph,
    h: &'a MGraph,
    // adj[m - 1]: host adjacency over multiedges of multiplicity >= m
    adj: Vec<Vec<Vec<Vertex>>>,
    order: Vec<Vertex>,
    pattern_edges: Vec<((Vertex, Vertex), usize)>,
    branch: Vec<Vertex>,
    used: Vec<bool>,
    routes: Vec<((Vertex, Vertex), usize, Vec<Vertex>)>,
}

impl Search<'_> {
    fn assign(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return self.route(0);
        }
        let x = self.order[i];
        for cand in 0..self.g.vertex_count() {
            if self.used[cand] || !self.degree_fits(x, cand) {
                continue;
            }
            self.branch[x] = cand;
            self.used[cand] = true;
            if self.assign(i + 1) {
                return true;
            }
            self.used[cand] = false;
        }
        self.branch[x] = usize::MAX;
        false
    }

    // every pattern multiedge at x needs a distinct host multiedge at the image
    fn degree_fits(&self, x: Vertex, cand: Vertex) -> bool {
        let mut needs: Vec<usize> = self
            .h
            .neighbors(x)
            .into_iter()
            .map(|y| self.h.multiplicity(x, y))
            .collect();
        needs.sort_unstable_by(|a, b| b.cmp(a));
        let mut have: Vec<usize> = self
            .g
            .neighbors(cand)
            .into_iter()
            .map(|y| self.g.multiplicity(cand, y))
            .collect();
        have.sort_unstable_by(|a, b| b.cmp(a));
        needs.len() <= have.len() && needs.iter().zip(&have).all(|(n, h)| h >= n)
    }

    fn route(&mut self, k: usize) -> bool {
        if k == self.pattern_edges.len() {
            return true;
        }
        let ((x, y), mult) = self.pattern_edges[k];
        let (a, b) = (self.branch[x], self.branch[y]);
        let mut path = vec![a];
        self.extend(k, mult, b, &mut path)
    }

    fn extend(&mut self, k: usize, mult: usize, target: Vertex, path: &mut Vec<Vertex>) -> bool {
        let cur = *path.last().unwrap();
        let next: Vec<Vertex> = self.adj[mult - 1][cur].clone();
        for y in next {
            if y == target {
                path.push(y);
                let ((px, py), _) = self.pattern_edges[k];
                self.routes.push(((px, py), mult, path.clone()));
                if self.route(k + 1) {
                    return true;
                }
                self.routes.pop();
                path.pop();
            } else if !self.used[y] {
                self.used[y] = true;
                path.push(y);
                if self.extend(k, mult, target, path) {
                    return true;
                }
                path.pop();
                self.used[y] = false;
            }
        }
        false
    }
}

/// Vertices touched by the embedding's routes, including branch vertices.
pub fn embedding_vertices(e: &MinorEmbedding) -> BTreeSet<Vertex> {
    e.branch
        .iter()
        .copied()
        .chain(e.routes.iter().flat_map(|(_, _, p)| p.iter().copied()))
        .collect()
}
