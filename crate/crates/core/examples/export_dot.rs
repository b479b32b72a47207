//! DOT output: the whole graph with a path family highlighted, a union of
//! snapshots, and the 2-fold product digraph.
//!
//! Pipe any of the blocks through `dot -Tsvg`.

use snapcut::disjoint_paths::{build_product, max_snapshot_disjoint, DEFAULT_BUDGET};
use snapcut::fixtures;
use snapcut::io::{to_dot, DotOptions};

fn main() -> snapcut::Result<()> {
    let g = fixtures::fig7();
    let (s, z) = (g.vertex("s")?, g.vertex("z")?);

    let family = max_snapshot_disjoint(&g, s, z, 2, DEFAULT_BUDGET)?;
    print!(
        "{}",
        to_dot(
            &g,
            &DotOptions {
                highlight: family.paths,
                title: Some("fig7".into()),
                ..Default::default()
            }
        )
    );

    let early = DotOptions {
        snapshots: Some([1, 2].into()),
        title: Some("fig7 at 1 and 2".into()),
        ..Default::default()
    };
    print!("{}", to_dot(&g, &early));

    let product = build_product(&g, s, z, 2, DEFAULT_BUDGET)?;
    print!("{}", product.to_dot(&g)?);
    Ok(())
}
