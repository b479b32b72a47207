//! Snapshot cuts (sets of timesteps) and multiedge cuts.
//!
//! Snapshot cuts are decided by enumerating label subsets, restricted to the
//! labels that occur on some temporal `s`-`z` walk. Supersets of a cut are
//! cuts, so deciding "size at most h" only needs the subsets of size exactly
//! `min(h, L)`; [`min_snapshot_cut`] walks sizes upward, which makes the
//! returned witness the lexicographically least cut of minimum size.
//!
//! Multiedge cuts are NP-hard already for two timesteps; they are decided by
//! a bounded search tree that branches on the multiedges of a surviving path.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Label, TemporalGraph, Vertex};

/// Default cap on enumerated subsets or search-tree nodes.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SnapshotCut {
    pub timesteps: BTreeSet<Label>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutOutcome {
    pub cut: Option<SnapshotCut>,
    /// Candidate labels after pruning.
    pub candidates: Vec<Label>,
    /// Subsets tested.
    pub subsets_checked: u128,
}

#[derive(Clone, Copy, Debug)]
pub struct CutOptions {
    pub budget: u128,
    /// Worker threads; 1 keeps everything on the calling thread.
    pub threads: usize,
}

impl Default for CutOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            threads: 1,
        }
    }
}

/// `C(n, k)`, saturating.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

// The `rank`-th k-subset of 0..n in lexicographic order.
fn unrank(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0;
    for left in (1..=k).rev() {
        loop {
            let with = binomial(n - next - 1, left - 1);
            if rank < with {
                out.push(next);
                next += 1;
                break;
            }
            rank -= with;
            next += 1;
        }
    }
    out
}

fn is_cut(g: &TemporalGraph, s: Vertex, z: Vertex, removed: &[Label]) -> bool {
    g.reachable_with(s, z, |e| !removed.contains(&g.label(e))).is_none()
}

/// Is `s` cut from `z` by deleting every edge active at one of `timesteps`?
pub fn is_snapshot_cut(g: &TemporalGraph, s: Vertex, z: Vertex, timesteps: &BTreeSet<Label>) -> bool {
    g.reachable_with(s, z, |e| !timesteps.contains(&g.label(e))).is_none()
}

/// Decides whether a snapshot cut of at most `h` timesteps exists.
pub fn snapshot_cut_at_most(g: &TemporalGraph, s: Vertex, z: Vertex, h: usize, opts: CutOptions) -> Result<CutOutcome> {
    if s == z {
        return Err(Error::InvalidInput("s and z must differ".into()));
    }
    let candidates: Vec<Label> = g.relevant_labels(s, z).into_iter().collect();
    if g.reachable(s, z).is_none() {
        return Ok(CutOutcome {
            cut: Some(SnapshotCut {
                timesteps: BTreeSet::new(),
            }),
            candidates,
            subsets_checked: 0,
        });
    }
    let size = h.min(candidates.len());
    let total = binomial(candidates.len(), size);
    if total > opts.budget {
        return Err(Error::BudgetExceeded {
            budget: opts.budget,
            needed: total,
        });
    }
    let test = |rank: u128| {
        let picked: Vec<Label> = unrank(candidates.len(), size, rank)
            .into_iter()
            .map(|i| candidates[i])
            .collect();
        is_cut(g, s, z, &picked).then_some(picked)
    };
    let (found, checked) = if opts.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::InvalidInput(e.to_string()))?;
        let found = pool.install(|| (0..total).into_par_iter().find_map_first(test));
        // parallel workers may test past the witness; report the sequential count
        let checked = found.as_ref().map_or(total, |f: &Vec<Label>| {
            let idx: Vec<usize> = f.iter().map(|t| candidates.binary_search(t).unwrap()).collect();
            rank_of(candidates.len(), &idx) + 1
        });
        (found, checked)
    } else {
        let mut checked = 0;
        let mut found = None;
        for rank in 0..total {
            checked += 1;
            if let Some(f) = test(rank) {
                found = Some(f);
                break;
            }
        }
        (found, checked)
    };
    Ok(CutOutcome {
        cut: found.map(|f| SnapshotCut {
            timesteps: f.into_iter().collect(),
        }),
        candidates,
        subsets_checked: checked,
    })
}

fn rank_of(n: usize, combo: &[usize]) -> u128 {
    let k = combo.len();
    let mut rank = 0;
    let mut next = 0;
    for (i, &c) in combo.iter().enumerate() {
        for skipped in next..c {
            rank += binomial(n - skipped - 1, k - i - 1);
        }
        next = c + 1;
    }
    rank
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinCut {
    pub value: usize,
    pub cut: SnapshotCut,
    pub subsets_checked: u128,
}

/// The minimum snapshot cut, trying sizes 0, 1, 2, ... in turn.
pub fn min_snapshot_cut(g: &TemporalGraph, s: Vertex, z: Vertex, opts: CutOptions) -> Result<MinCut> {
    let mut checked = 0;
    for h in 0.. {
        let out = snapshot_cut_at_most(g, s, z, h, opts)?;
        checked += out.subsets_checked;
        if let Some(cut) = out.cut {
            return Ok(MinCut {
                value: cut.timesteps.len(),
                cut,
                subsets_checked: checked,
            });
        }
    }
    unreachable!("the full candidate set is a cut")
}

/// Multiedges as `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiedgeCut {
    pub multiedges: BTreeSet<(Vertex, Vertex)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiedgeOutcome {
    pub cut: Option<MultiedgeCut>,
    /// Search-tree nodes expanded.
    pub nodes: u128,
}

pub fn is_multiedge_cut(g: &TemporalGraph, s: Vertex, z: Vertex, cut: &BTreeSet<(Vertex, Vertex)>) -> bool {
    g.reachable_with(s, z, |e| !cut.contains(&g.edge(e).multiedge()))
        .is_none()
}

/// Decides whether at most `h` multiedges meet every temporal `s`-`z` path.
///
/// Some multiedge of any surviving path must be in the cut, so the search
/// branches over the multiedges of one such path; a packing of
/// multiedge-disjoint surviving paths bounds the remaining cut size from below.
/// Sizes are tried in increasing order, so a returned cut is minimum when
/// `h` is at least the minimum.
pub fn multiedge_cut_at_most(
    g: &TemporalGraph,
    s: Vertex,
    z: Vertex,
    h: usize,
    budget: u128,
) -> Result<MultiedgeOutcome> {
    if s == z {
        return Err(Error::InvalidInput("s and z must differ".into()));
    }
    let mut search = MultiedgeSearch {
        g,
        s,
        z,
        budget,
        nodes: 0,
        chosen: Vec::new(),
    };
    for size in 0..=h {
        if search.branch(size)? {
            let multiedges = search.chosen.iter().copied().collect();
            return Ok(MultiedgeOutcome {
                cut: Some(MultiedgeCut { multiedges }),
                nodes: search.nodes,
            });
        }
    }
    Ok(MultiedgeOutcome {
        cut: None,
        nodes: search.nodes,
    })
}

/// The minimum multiedge cut.
pub fn min_multiedge_cut(g: &TemporalGraph, s: Vertex, z: Vertex, budget: u128) -> Result<MultiedgeOutcome> {
    let all: BTreeSet<_> = g.edges().iter().map(|e| e.multiedge()).collect();
    multiedge_cut_at_most(g, s, z, all.len(), budget)
}

struct MultiedgeSearch<'a> {
    g: &'a TemporalGraph,
    s: Vertex,
    z: Vertex,
    budget: u128,
    nodes: u128,
    chosen: Vec<(Vertex, Vertex)>,
}

impl MultiedgeSearch<'_> {
    fn path_avoiding(&self, extra: &BTreeSet<(Vertex, Vertex)>) -> Option<Vec<(Vertex, Vertex)>> {
        let g = self.g;
        let p = g.reachable_with(self.s, self.z, |e| {
            let key = g.edge(e).multiedge();
            !self.chosen.contains(&key) && !extra.contains(&key)
        })?;
        let mut keys: Vec<_> = p.edges.iter().map(|&e| g.edge(e).multiedge()).collect();
        keys.dedup();
        Some(keys)
    }

    // Multiedge-disjoint surviving paths found greedily.
    fn packing_bound(&self, cap: usize) -> usize {
        let mut used = BTreeSet::new();
        let mut count = 0;
        while count <= cap {
            match self.path_avoiding(&used) {
                Some(keys) => {
                    used.extend(keys);
                    count += 1;
                }
                None => break,
            }
        }
        count
    }

    fn branch(&mut self, left: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
                needed: self.nodes,
            });
        }
        let Some(path) = self.path_avoiding(&BTreeSet::new()) else {
            return Ok(true);
        };
        if left == 0 || self.packing_bound(left) > left {
            return Ok(false);
        }
        for key in path {
            self.chosen.push(key);
            if self.branch(left - 1)? {
                return Ok(true);
            }
            self.chosen.pop();
        }
        Ok(false)
    }
}
