//! Is a multigraph Mengerian, i.e. does p = c hold for every labeling and
//! every pair of endpoints? Rejections come with a forbidden-minor witness
//! and a labeling that shows the gap.

use snapcut::mengerian::{self, lift_catalog_labeling};
use snapcut::oracles::{brute_force_c, brute_force_p, PATH_LIMIT};
use snapcut::{io, MGraph};

fn main() -> snapcut::Result<()> {
    let graphs = [
        (
            "4-cycle",
            MGraph::from_multiedges(&[("a", "b", 1), ("b", "c", 1), ("c", "d", 1), ("d", "a", 1)])?,
        ),
        (
            "triangle, one edge doubled",
            MGraph::from_multiedges(&[("a", "b", 2), ("b", "c", 1), ("a", "c", 1)])?,
        ),
        (
            "K4 minus an edge",
            MGraph::from_multiedges(&[
                ("a", "b", 1),
                ("a", "c", 1),
                ("b", "c", 1),
                ("b", "d", 1),
                ("c", "d", 1),
            ])?,
        ),
    ];
    for (name, g) in &graphs {
        let verdict = mengerian::recognize(g);
        print!("{name}: ");
        match &verdict.witness {
            None => println!("Mengerian"),
            Some(w) => {
                let (lab, s, z) = lift_catalog_labeling(w)?;
                let p = brute_force_p(&lab, s, z, PATH_LIMIT)?.value;
                let c = brute_force_c(&lab, s, z, PATH_LIMIT)?.value;
                println!(
                    "not Mengerian, contains {:?}; a labeling has p = {p} < c = {c}",
                    w.minor
                );
                print!("{}", io::mgraph_to_dot(&w.subgraph, &format!("{:?}", w.minor)));
            }
        }
    }

    // subdividing can destroy the property
    let tri = &graphs[1].1;
    let sub = tri.m_subdivide(tri.vertex("b")?, tri.vertex("c")?)?;
    println!(
        "after subdividing bc: Mengerian = {}",
        mengerian::recognize(&sub).mengerian
    );
    Ok(())
}
