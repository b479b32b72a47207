//! Biconnected components of `U(G)` (Hopcroft-Tarjan), carrying multiplicities.

use std::collections::{BTreeSet, VecDeque};

use crate::graph::Vertex;
use crate::multigraph::MGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertices: BTreeSet<Vertex>,
    /// Multiedges `(u, v)` with `u < v`.
    pub edges: Vec<(Vertex, Vertex)>,
}

impl Block {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    /// `U(B)` is a cycle.
    pub fn is_cycle(&self) -> bool {
        self.vertices.len() >= 3 && self.edges.len() == self.vertices.len()
    }

    pub fn max_multiplicity(&self, g: &MGraph) -> usize {
        self.edges.iter().map(|&(a, b)| g.multiplicity(a, b)).max().unwrap_or(0)
    }

    /// Adjacency of `U(B)` indexed by host vertex.
    pub fn adjacency(&self, n: usize) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    /// Indices of the 2-vertex blocks whose multiedge has multiplicity at least 2.
    pub heavy_bridges: Vec<usize>,
    pub cut_vertices: BTreeSet<Vertex>,
}

pub fn decompose(g: &MGraph) -> BlockDecomposition {
    let n = g.vertex_count();
    let adj = g.adjacency(1);
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut blocks = Vec::new();
    let mut cut_vertices = BTreeSet::new();

    for root in 0..n {
        if disc[root] != usize::MAX || adj[root].is_empty() {
            continue;
        }
        // iterative DFS: (vertex, parent, next neighbor index)
        let mut frames: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        while let Some(&(x, parent, next)) = frames.last() {
            if next < adj[x].len() {
                let y = adj[x][next];
                frames.last_mut().unwrap().2 += 1;
                if disc[y] == usize::MAX {
                    stack.push((x, y));
                    disc[y] = time;
                    low[y] = time;
                    time += 1;
                    if x == root {
                        root_children += 1;
                    }
                    frames.push((y, x, 0));
                } else if y != parent && disc[y] < disc[x] {
                    stack.push((x, y));
                    low[x] = low[x].min(disc[y]);
                }
            } else {
                frames.pop();
                if parent == usize::MAX {
                    continue;
                }
                low[parent] = low[parent].min(low[x]);
                if low[x] >= disc[parent] {
                    if parent != root {
                        cut_vertices.insert(parent);
                    }
                    let mut edges = Vec::new();
                    while let Some(e) = stack.pop() {
                        edges.push((e.0.min(e.1), e.0.max(e.1)));
                        if e == (parent, x) {
                            break;
                        }
                    }
                    edges.sort_unstable();
                    let vertices = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                    blocks.push(Block { vertices, edges });
                }
            }
        }
        if root_children > 1 {
            cut_vertices.insert(root);
        }
    }
    blocks.sort_by(|a, b| a.edges.cmp(&b.edges));
    let heavy_bridges = blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| b.len() == 2 && g.multiplicity(b.edges[0].0, b.edges[0].1) >= 2)
        .map(|(i, _)| i)
        .collect();
    BlockDecomposition {
        blocks,
        heavy_bridges,
        cut_vertices,
    }
}

/// Shortest path from `from` to `to` in `adj`, avoiding the direct edge
/// `from`-`to` and the vertices in `avoid`.
pub(crate) fn path_avoiding(
    adj: &[Vec<Vertex>],
    from: Vertex,
    to: Vertex,
    avoid: &BTreeSet<Vertex>,
) -> Option<Vec<Vertex>> {
    let mut parent = vec![usize::MAX; adj.len()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if (x == from && y == to) || parent[y] != usize::MAX || (y != to && avoid.contains(&y)) {
                continue;
            }
            parent[y] = x;
            if y == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(y);
        }
    }
    None
}

/// A cycle of `U(B)` through `v`, as a closed vertex sequence `v .. v`.
pub fn cycle_through(block: &Block, n: usize, v: Vertex) -> Option<Vec<Vertex>> {
    let adj = block.adjacency(n);
    let &u = adj[v].first()?;
    let mut path = path_avoiding(&adj, u, v, &BTreeSet::new())?;
    path.insert(0, v);
    Some(path)
}
