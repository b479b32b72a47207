//! Cutting multiedges instead of timesteps: removing a multiedge removes all
//! of its parallel edges at once.

use snapcut::cuts::{min_multiedge_cut, multiedge_cut_at_most, DEFAULT_BUDGET};
use snapcut::fixtures;

fn main() -> snapcut::Result<()> {
    let g = fixtures::fig1a();
    let (s, z) = (g.vertex("s")?, g.vertex("z")?);

    let out = min_multiedge_cut(&g, s, z, DEFAULT_BUDGET)?;
    let cut = out.cut.expect("removing every multiedge always works");
    let names: Vec<String> = cut
        .multiedges
        .iter()
        .map(|&(u, v)| format!("{}{}", g.name(u), g.name(v)))
        .collect();
    println!("minimum multiedge cut: {names:?} ({} search nodes)", out.nodes);

    let smaller = multiedge_cut_at_most(&g, s, z, cut.multiedges.len() - 1, DEFAULT_BUDGET)?;
    println!("anything smaller? {}", smaller.cut.is_some());
    Ok(())
}
