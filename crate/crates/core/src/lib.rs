//! Snapshot connectivity in temporal graphs: disjoint paths, snapshot cuts,
//! Mengerian recognition, hardness gadgets and brute-force oracles.

pub mod cli;
pub mod cuts;
pub mod disjoint_paths;
pub mod error;
pub mod fixtures;
pub mod gadgets;
pub mod graph;
pub mod injective_flow;
pub mod io;
pub mod mengerian;
pub mod minor;
pub mod multigraph;
pub mod oracles;
pub mod walk;

pub use error::{Error, Result};
pub use graph::{Label, TemporalEdge, TemporalGraph, Vertex};
pub use multigraph::{LabelPattern, MGraph};
pub use walk::TemporalWalk;
