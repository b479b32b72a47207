#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use snapcut::{MGraph, TemporalGraph};

/// A random temporal graph on `2..=max_v` vertices named `0, 1, ..` with
/// `1..=max_e` edges and labels in `1..=max_label`. With `injective` set,
/// labels are drawn without replacement (and the edge count capped to fit).
pub fn random_temporal<R: Rng>(
    rng: &mut R,
    max_v: usize,
    max_e: usize,
    max_label: u32,
    injective: bool,
) -> TemporalGraph {
    let n = rng.gen_range(2..=max_v);
    // a pair holds at most `max_label` parallel edges
    let room = n * (n - 1) / 2 * max_label as usize;
    let cap = if injective {
        max_e.min(max_label as usize)
    } else {
        max_e
    }
    .min(room);
    let m = rng.gen_range(1..=cap);
    let mut labels: Vec<u32> = (1..=max_label).collect();
    labels.shuffle(rng);
    let mut g = TemporalGraph::new();
    for v in 0..n {
        g.add_vertex(&v.to_string());
    }
    let mut placed = 0;
    while placed < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let t = if injective {
            labels[placed]
        } else {
            rng.gen_range(1..=max_label)
        };
        // a duplicate label on the same pair is rejected; draw again
        if g.add_edge_between(u, v, t).is_ok() {
            placed += 1;
        }
    }
    g
}

/// A random multigraph on `2..=max_v` vertices with at most `max_e` edges in total.
pub fn random_multigraph<R: Rng>(rng: &mut R, max_v: usize, max_e: usize) -> MGraph {
    let n = rng.gen_range(2..=max_v);
    let mut g = MGraph::with_vertices(n);
    let total = rng.gen_range(1..=max_e);
    for _ in 0..total {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            g.add_multiedge_between(u, v, 1).unwrap();
        }
    }
    g
}
