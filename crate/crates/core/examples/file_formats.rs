//! Reading and writing graphs: the whitespace edge list and the JSON document
//! that also keeps edge ids.

use snapcut::io;

fn main() -> snapcut::Result<()> {
    let text = "# u v t\ns a 1\na z 2\ns z 3\n";
    let g = io::parse_edge_list(text)?;
    println!(
        "{} vertices, {} edges, lifetime {}",
        g.vertex_count(),
        g.edge_count(),
        g.lifetime()
    );

    let json = io::to_json(&g);
    println!("{json}");
    let back = io::parse_graph(&json)?;
    assert_eq!(io::write_edge_list(&back), io::write_edge_list(&g));
    print!("{}", io::write_edge_list(&back));

    // problems are reported with the line that caused them
    if let Err(e) = io::parse_edge_list("s a 1\ns a zero\n") {
        println!("rejected: {e}");
    }
    Ok(())
}
