//! With every label used once, snapshot-disjoint means edge-disjoint and a
//! max flow on the time-expanded network gives p = c.

use snapcut::injective_flow::injective_connectivity;
use snapcut::{fixtures, Error, TemporalGraph};

fn main() -> snapcut::Result<()> {
    let g = TemporalGraph::from_triples(&[
        ("s", "a", 1),
        ("a", "b", 2),
        ("b", "z", 6),
        ("s", "c", 3),
        ("c", "b", 4),
        ("a", "z", 5),
        ("c", "z", 7),
    ])?;
    let (s, z) = (g.vertex("s")?, g.vertex("z")?);
    let f = injective_connectivity(&g, s, z)?;
    println!("p = {}, c = {}, cut timesteps {:?}", f.p, f.c, f.cut);
    for p in &f.paths {
        println!("    {}", p.display(&g));
    }

    // repeated labels are refused rather than answered wrongly
    let b = fixtures::fig1b();
    match injective_connectivity(&b, b.vertex("s")?, b.vertex("z")?) {
        Err(Error::NotInjective(t)) => println!("fig1b: label {t} is used twice"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
