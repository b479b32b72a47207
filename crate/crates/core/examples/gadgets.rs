//! The three hardness reductions on a 5-cycle, checked against direct search
//! on the source graph.

use snapcut::cuts::{multiedge_cut_at_most, snapshot_cut_at_most, CutOptions, DEFAULT_BUDGET};
use snapcut::disjoint_paths::max_snapshot_disjoint;
use snapcut::gadgets::{self, truth};
use snapcut::MGraph;

fn main() -> snapcut::Result<()> {
    let c5 = MGraph::from_multiedges(&[
        ("a", "b", 1),
        ("b", "c", 1),
        ("c", "d", 1),
        ("d", "e", 1),
        ("e", "a", 1),
    ])?;
    let n = c5.vertex_count();

    println!("independence number {}", truth::independence_number(&c5));
    for k in 1..=3 {
        let gad = gadgets::independent_set_instance(&c5, k)?;
        let got = max_snapshot_disjoint(&gad.graph, gad.s, gad.z, k, DEFAULT_BUDGET)?.found;
        println!(
            "  k={k}: {k} disjoint paths in the gadget? {got} (expected {:?})",
            gad.manifest.ground_truth
        );
    }

    println!("vertex cover number {}", truth::vertex_cover_number(&c5));
    for k in 2..=3 {
        let gad = gadgets::vertex_cover_instance(&c5, k)?;
        let got = multiedge_cut_at_most(&gad.graph, gad.s, gad.z, n + k, DEFAULT_BUDGET)?
            .cut
            .is_some();
        println!(
            "  k={k}: multiedge cut <= {}? {got} (expected {:?})",
            n + k,
            gad.manifest.ground_truth
        );
    }

    // 4 classes, so the cut bound C(4,2)+4 = 10 is tight
    let g = MGraph::from_multiedges(&[
        ("a", "c", 1),
        ("a", "e", 1),
        ("a", "g", 1),
        ("c", "e", 1),
        ("c", "g", 1),
        ("e", "g", 1),
        ("b", "d", 1),
        ("d", "f", 1),
    ])?;
    let coloring = gadgets::parse_coloring(&g, "a=0,b=0,c=1,d=1,e=2,f=2,g=3")?;
    let gad = gadgets::clique_instance(&g, &coloring, 4)?;
    let opts = CutOptions {
        budget: u128::MAX,
        threads: 1,
    };
    let got = snapshot_cut_at_most(&gad.graph, gad.s, gad.z, 10, opts)?.cut.is_some();
    println!(
        "clique gadget: {} vertices, {} edges; cut <= 10? {got} (expected {:?})",
        gad.graph.vertex_count(),
        gad.graph.edge_count(),
        gad.manifest.ground_truth
    );
    println!("{}", gad.manifest_json());
    Ok(())
}
