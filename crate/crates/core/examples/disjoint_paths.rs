//! How many snapshot-disjoint paths connect s to z?
//!
//! Run with `cargo run --example disjoint_paths`.

use snapcut::disjoint_paths::{self, max_snapshot_disjoint, tuple_bound, DEFAULT_BUDGET};
use snapcut::{fixtures, TemporalGraph};

fn main() -> snapcut::Result<()> {
    // two routes that share no timestep, and a third one that reuses label 1
    let g = TemporalGraph::from_triples(&[
        ("s", "a", 1),
        ("a", "z", 3),
        ("s", "b", 2),
        ("b", "z", 4),
        ("s", "c", 1),
        ("c", "z", 5),
    ])?;
    let (s, z) = (g.vertex("s")?, g.vertex("z")?);
    for k in 1..=3 {
        let out = max_snapshot_disjoint(&g, s, z, k, DEFAULT_BUDGET)?;
        println!(
            "k={k}: {} (visited {} of at most {} product vertices)",
            if out.found { "yes" } else { "no" },
            out.visited,
            tuple_bound(g.edge_count(), k)
        );
        for p in &out.paths {
            println!("    {}", p.display(&g));
        }
    }

    let fig = fixtures::fig7();
    let best = disjoint_paths::max_family(&fig, fig.vertex("s")?, fig.vertex("z")?, DEFAULT_BUDGET)?;
    println!(
        "fig7: a largest family has {} paths with label sets {:?}",
        best.paths.len(),
        disjoint_paths::label_sets(&fig, &best.paths)
    );
    Ok(())
}
