//! The five forbidden minors, each checked against its shipped labeling.

use snapcut::mengerian::catalog;

fn main() -> snapcut::Result<()> {
    for check in catalog::verify_catalog()? {
        println!("{}: p = {}, c = {}", check.name, check.p, check.c);
    }
    for e in catalog::entries() {
        let g = e.pattern();
        println!("{:?}: {} vertices, {} edges", e.name, g.vertex_count(), g.edge_count());
    }
    Ok(())
}
