//! Built-in example graphs.
//!
//! `fig1a` is the introductory lifetime-4 graph on `s, w, u, v, z`; `fig1b` is
//! the four-vertex pair where the minimum snapshot cut exceeds the number of
//! snapshot-disjoint paths; `fig7` is the small product-digraph instance.

use crate::graph::TemporalGraph;
use crate::io::parse_edge_list;
use crate::mengerian::catalog::{self, MinorName};

const FIG1A: &str = include_str!("../data/fixtures/fig1a.txt");
const FIG1B: &str = include_str!("../data/fixtures/fig1b.txt");
const FIG7: &str = include_str!("../data/fixtures/fig7.txt");

pub fn fig1a() -> TemporalGraph {
    parse_edge_list(FIG1A).expect("bundled fixture parses")
}

pub fn fig1b() -> TemporalGraph {
    parse_edge_list(FIG1B).expect("bundled fixture parses")
}

pub fn fig7() -> TemporalGraph {
    parse_edge_list(FIG7).expect("bundled fixture parses")
}

pub const NAMES: [&str; 8] = ["fig1a", "fig1b", "fig7", "M1", "M2", "M3", "M4", "M5"];

/// Looks up a fixture or a labeled catalog entry by name.
pub fn by_name(name: &str) -> Option<TemporalGraph> {
    match name {
        "fig1a" => Some(fig1a()),
        "fig1b" => Some(fig1b()),
        "fig7" => Some(fig7()),
        other => other.parse::<MinorName>().ok().map(|m| catalog::entry(m).graph),
    }
}
