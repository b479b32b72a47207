//! Brute-force ground truth for `p`, `c`, multiedge cuts and Mengerian-ness.
//!
//! Nothing in here calls the product-digraph search, the cut enumerator or
//! the flow network; these functions only enumerate paths and subsets.

pub mod canon;
pub mod semantic;

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::graph::{Label, TemporalGraph, Vertex};
use crate::minor::has_m_topological_minor;
use crate::multigraph::MGraph;
use crate::walk::{enumerate_paths, TemporalWalk};

pub use semantic::{Counterexample, SemanticOracle};

/// Default cap on enumerated paths.
pub const PATH_LIMIT: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyWitness {
    pub value: usize,
    pub paths: Vec<TemporalWalk>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutWitness {
    pub value: usize,
    pub labels: BTreeSet<Label>,
}

// Paths reduced to their label sets over a compressed label alphabet.
struct LabelSets {
    alphabet: Vec<Label>,
    // (mask, index of a representative path); inclusion-minimal masks only
    masks: Vec<(u128, usize)>,
}

fn label_sets(g: &TemporalGraph, paths: &[TemporalWalk]) -> Result<LabelSets> {
    let alphabet: Vec<Label> = paths
        .iter()
        .flat_map(|p| p.edges.iter().map(|&e| g.label(e)))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if alphabet.len() > 128 {
        return Err(Error::LimitExceeded { limit: 128 });
    }
    let pos: HashMap<Label, usize> = alphabet.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let mut first: HashMap<u128, usize> = HashMap::new();
    let mut order = Vec::new();
    for (i, p) in paths.iter().enumerate() {
        let mask = p.edges.iter().fold(0u128, |m, &e| m | 1 << pos[&g.label(e)]);
        if let std::collections::hash_map::Entry::Vacant(v) = first.entry(mask) {
            v.insert(i);
            order.push(mask);
        }
    }
    // a path whose label set contains another's is never needed
    let masks = order
        .iter()
        .filter(|&&m| !order.iter().any(|&o| o != m && o & m == o))
        .map(|&m| (m, first[&m]))
        .collect();
    Ok(LabelSets { alphabet, masks })
}

/// `p(s,z)`: the largest family of pairwise snapshot-disjoint temporal paths,
/// found as a maximum independent set of the label-conflict graph.
pub fn brute_force_p(g: &TemporalGraph, s: Vertex, z: Vertex, limit: usize) -> Result<FamilyWitness> {
    if s == z {
        return Err(Error::InvalidInput("s and z must differ".into()));
    }
    let paths = enumerate_paths(g, s, z, limit)?;
    let sets = label_sets(g, &paths)?;
    let masks: Vec<u128> = sets.masks.iter().map(|&(m, _)| m).collect();
    let chosen = max_disjoint(&masks);
    Ok(FamilyWitness {
        value: chosen.len(),
        paths: chosen.iter().map(|&i| paths[sets.masks[i].1].clone()).collect(),
    })
}

/// `c(s,z)`: the smallest set of timesteps meeting every temporal path.
/// Subsets are tried by increasing size, lexicographically within a size.
pub fn brute_force_c(g: &TemporalGraph, s: Vertex, z: Vertex, limit: usize) -> Result<CutWitness> {
    if s == z {
        return Err(Error::InvalidInput("s and z must differ".into()));
    }
    let paths = enumerate_paths(g, s, z, limit)?;
    let sets = label_sets(g, &paths)?;
    let masks: Vec<u128> = sets.masks.iter().map(|&(m, _)| m).collect();
    let n = sets.alphabet.len();
    for size in 0..=n {
        let mut found = None;
        for_each_combination(n, size, &mut |combo| {
            let hit = combo.iter().fold(0u128, |m, &i| m | 1 << i);
            if masks.iter().all(|&p| p & hit != 0) {
                found = Some(combo.to_vec());
                false
            } else {
                true
            }
        });
        if let Some(combo) = found {
            return Ok(CutWitness {
                value: size,
                labels: combo.into_iter().map(|i| sets.alphabet[i]).collect(),
            });
        }
    }
    unreachable!("the full alphabet hits every non-trivial path")
}

/// Smallest multiedge cut, by trying every set of multiedges in order of size.
/// Multiedges are `(u, v)` with `u < v`; a cut removes all parallel edges.
pub fn brute_force_multiedge_cut(
    g: &TemporalGraph,
    s: Vertex,
    z: Vertex,
    limit: usize,
) -> Result<BTreeSet<(Vertex, Vertex)>> {
    if s == z {
        return Err(Error::InvalidInput("s and z must differ".into()));
    }
    let paths = enumerate_paths(g, s, z, limit)?;
    let multiedges: Vec<(Vertex, Vertex)> = g
        .edges()
        .iter()
        .map(|e| e.multiedge())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if multiedges.len() > 128 {
        return Err(Error::LimitExceeded { limit: 128 });
    }
    let pos: HashMap<(Vertex, Vertex), usize> = multiedges.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let masks: Vec<u128> = paths
        .iter()
        .map(|p| p.edges.iter().fold(0u128, |m, &e| m | 1 << pos[&g.edge(e).multiedge()]))
        .collect();
    for size in 0..=multiedges.len() {
        let mut found = None;
        for_each_combination(multiedges.len(), size, &mut |combo| {
            let hit = combo.iter().fold(0u128, |m, &i| m | 1 << i);
            if masks.iter().all(|&p| p & hit != 0) {
                found = Some(combo.iter().map(|&i| multiedges[i]).collect());
                false
            } else {
                true
            }
        });
        if let Some(cut) = found {
            return Ok(cut);
        }
    }
    unreachable!("removing every multiedge disconnects s from z")
}

/// Calls `f` on every `size`-subset of `0..n` in lexicographic order until it returns false.
pub(crate) fn for_each_combination(n: usize, size: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    if size > n {
        return;
    }
    let mut combo: Vec<usize> = (0..size).collect();
    loop {
        if !f(&combo) {
            return;
        }
        let mut i = size;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if combo[i] < n - size + i {
                combo[i] += 1;
                for j in i + 1..size {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Maximum set of pairwise disjoint masks (indices in increasing order).
///
/// Branch and bound seeded with the greedy smallest-first packing; the bound
/// counts both remaining candidates and free labels.
pub(crate) fn max_disjoint(masks: &[u128]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..masks.len()).collect();
    order.sort_by_key(|&i| (masks[i].count_ones(), i));
    let mut best: Vec<usize> = Vec::new();
    let mut used = 0u128;
    for &i in &order {
        if masks[i] & used == 0 {
            used |= masks[i];
            best.push(i);
        }
    }
    let mut current = Vec::new();
    branch(masks, &order, 0, 0, &mut current, &mut best);
    best.sort_unstable();
    best
}

fn branch(masks: &[u128], order: &[usize], at: usize, used: u128, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    let free = order[at..].iter().filter(|&&i| masks[i] & used == 0).count();
    let all: u128 = order[at..].iter().fold(0, |m, &i| m | masks[i]);
    let labels_left = (all & !used).count_ones() as usize;
    if current.len() + free.min(labels_left) <= best.len() {
        return;
    }
    for k in at..order.len() {
        let i = order[k];
        if masks[i] & used != 0 {
            continue;
        }
        current.push(i);
        branch(masks, order, k + 1, used | masks[i], current, best);
        current.pop();
    }
}

/// Finds the non-Mengerian multigraphs within the bounds (isolated vertices
/// ignored) that contain no other such graph as an m-topological minor.
pub fn search_minimal_non_mengerian(
    max_vertices: usize,
    max_edges: usize,
    oracle: &mut SemanticOracle,
) -> Result<Vec<MGraph>> {
    let graphs = canon::enumerate_multigraphs(max_vertices, max_edges);
    let mut bad = Vec::new();
    for g in graphs {
        if oracle.counterexample(&g)?.is_some() {
            bad.push(g);
        }
    }
    let mut minimal = Vec::new();
    for (i, g) in bad.iter().enumerate() {
        let mut has_smaller = false;
        for (j, h) in bad.iter().enumerate() {
            if i != j
                && h.edge_count() + h.vertex_count() < g.edge_count() + g.vertex_count()
                && has_m_topological_minor(g, h)?
            {
                has_smaller = true;
                break;
            }
        }
        if !has_smaller {
            minimal.push(g.clone());
        }
    }
    Ok(minimal)
}
