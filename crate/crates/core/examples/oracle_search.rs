//! Rediscover the forbidden minors from scratch: enumerate small multigraphs,
//! try every label pattern, keep the minimal failures.
//!
//! `cargo run --release --example oracle_search -- 5 7`

use snapcut::io;
use snapcut::oracles::{search_minimal_non_mengerian, SemanticOracle};

fn main() -> snapcut::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("a number"));
    let max_vertices = args.next().unwrap_or(4);
    let max_edges = args.next().unwrap_or(6);

    let mut oracle = SemanticOracle::new();
    let found = search_minimal_non_mengerian(max_vertices, max_edges, &mut oracle)?;
    println!(
        "{} minimal non-Mengerian multigraphs with <= {max_vertices} vertices and <= {max_edges} edges ({} label patterns tried)",
        found.len(),
        oracle.patterns_checked
    );
    for (i, g) in found.iter().enumerate() {
        print!("{}", io::mgraph_to_dot(g, &format!("minimal{i}")));
    }
    Ok(())
}
