//! File formats: whitespace edge lists, the structured JSON document and DOT.
//!
//! Edge list: one edge per line as `u v t`; a line holding a single token
//! declares an isolated vertex; `#` starts a comment line.
//!
//! Structured document:
//! `{"vertices": [..], "edges": [{"id": 0, "u": "s", "v": "a", "t": 1}, ..]}`
//! with optional `name`, `s` and `z` fields used by the shipped catalog.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Label, TemporalGraph};
use crate::multigraph::MGraph;
use crate::walk::TemporalWalk;

pub fn parse_edge_list(text: &str) -> Result<TemporalGraph> {
    let mut g = TemporalGraph::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let err = |message: String| Error::Parse { line: i + 1, message };
        match tokens.as_slice() {
            [v] => {
                g.add_vertex(v);
            }
            [u, v, t] => {
                let t: Label = t.parse().map_err(|_| err(format!("bad timestep `{t}`")))?;
                g.add_edge(u, v, t).map_err(|e| err(e.to_string()))?;
            }
            _ => return Err(err(format!("expected `u v t`, got `{line}`"))),
        }
    }
    Ok(g)
}

pub fn write_edge_list(g: &TemporalGraph) -> String {
    let mut out = String::new();
    let mut touched = vec![false; g.vertex_count()];
    for e in g.edges() {
        touched[e.u] = true;
        touched[e.v] = true;
    }
    for (v, seen) in touched.iter().enumerate() {
        if !seen {
            let _ = writeln!(out, "{}", g.name(v));
        }
    }
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", g.name(e.u), g.name(e.v), e.label);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub id: u64,
    pub u: String,
    pub v: String,
    pub t: Label,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<String>,
}

impl GraphDocument {
    pub fn from_graph(g: &TemporalGraph) -> Self {
        Self {
            name: None,
            vertices: g.names().to_vec(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeRecord {
                    id: e.id,
                    u: g.name(e.u).to_string(),
                    v: g.name(e.v).to_string(),
                    t: e.label,
                })
                .collect(),
            s: None,
            z: None,
        }
    }

    pub fn to_graph(&self) -> Result<TemporalGraph> {
        let mut g = TemporalGraph::new();
        for v in &self.vertices {
            g.add_vertex(v);
        }
        for e in &self.edges {
            for end in [&e.u, &e.v] {
                if !self.vertices.contains(end) {
                    return Err(Error::UnknownVertex(end.clone()));
                }
            }
            g.add_edge_with_id(e.id, &e.u, &e.v, e.t)?;
        }
        Ok(g)
    }
}

pub fn to_json(g: &TemporalGraph) -> String {
    serde_json::to_string_pretty(&GraphDocument::from_graph(g)).expect("document serializes")
}

pub fn from_json(text: &str) -> Result<TemporalGraph> {
    serde_json::from_str::<GraphDocument>(text)?.to_graph()
}

/// Parses either format, picking the structured one when the text is a JSON object.
pub fn parse_graph(text: &str) -> Result<TemporalGraph> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        parse_edge_list(text)
    }
}

pub fn read_graph(path: &Path) -> Result<TemporalGraph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

/// What to draw in [`to_dot`].
#[derive(Clone, Debug, Default)]
pub struct DotOptions {
    /// Only draw edges active at these timesteps (a union of snapshots).
    pub snapshots: Option<BTreeSet<Label>>,
    /// Walks to highlight, one color each.
    pub highlight: Vec<TemporalWalk>,
    pub title: Option<String>,
}

const PALETTE: [&str; 6] = ["red", "blue", "darkgreen", "orange", "purple", "brown"];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn to_dot(g: &TemporalGraph, opts: &DotOptions) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", quote(opts.title.as_deref().unwrap_or("temporal")));
    for name in g.names() {
        let _ = writeln!(out, "  {};", quote(name));
    }
    for (i, e) in g.edges().iter().enumerate() {
        if let Some(keep) = &opts.snapshots {
            if !keep.contains(&e.label) {
                continue;
            }
        }
        let color = opts
            .highlight
            .iter()
            .position(|w| w.edges.contains(&i))
            .map(|k| format!(", color={}, penwidth=2", PALETTE[k % PALETTE.len()]))
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "  {} -- {} [label=\"{}\"{}];",
            quote(g.name(e.u)),
            quote(g.name(e.v)),
            e.label,
            color
        );
    }
    out.push_str("}\n");
    out
}

/// DOT for a label-free multigraph; multiedges are drawn once with `xμ`.
pub fn mgraph_to_dot(g: &MGraph, title: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", quote(title));
    for name in g.names() {
        let _ = writeln!(out, "  {};", quote(name));
    }
    for ((a, b), m) in g.multiedges() {
        let label = if m > 1 {
            format!(" [label=\"x{m}\"]")
        } else {
            String::new()
        };
        let _ = writeln!(out, "  {} -- {}{};", quote(g.name(a)), quote(g.name(b)), label);
    }
    out.push_str("}\n");
    out
}
