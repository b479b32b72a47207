//! Snapshot cuts: delete whole timesteps until s cannot reach z.
//!
//! fig1b is the small graph where one path at a time is all you get, yet no
//! single timestep separates the endpoints.

use snapcut::cuts::{is_snapshot_cut, min_snapshot_cut, snapshot_cut_at_most, CutOptions};
use snapcut::fixtures;
use snapcut::oracles::{brute_force_c, brute_force_p, PATH_LIMIT};

fn main() -> snapcut::Result<()> {
    let g = fixtures::fig1b();
    let (s, z) = (g.vertex("s")?, g.vertex("z")?);

    let one = snapshot_cut_at_most(&g, s, z, 1, CutOptions::default())?;
    println!("cut of size 1: {:?} after {} subsets", one.cut, one.subsets_checked);

    let min = min_snapshot_cut(
        &g,
        s,
        z,
        CutOptions {
            threads: 2,
            ..CutOptions::default()
        },
    )?;
    println!("minimum cut {:?}", min.cut.timesteps);
    assert!(is_snapshot_cut(&g, s, z, &min.cut.timesteps));

    // the exhaustive oracles agree, and show the gap between p and c
    let p = brute_force_p(&g, s, z, PATH_LIMIT)?.value;
    let c = brute_force_c(&g, s, z, PATH_LIMIT)?.value;
    println!("p = {p}, c = {c}");
    Ok(())
}
