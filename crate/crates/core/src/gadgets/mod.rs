//! Temporal graphs built by the hardness reductions, usable as test
//! generators whose answers are known from the source instance.
//!
//! * [`independent_set_instance`]: k snapshot-disjoint paths exist iff the
//!   source has an independent set of size k.
//! * [`clique_instance`]: a snapshot cut of size at most `C(k,2) + k` exists
//!   iff the colored source has a multicolored k-clique (the argument needs
//!   `k >= 4`; for `k = 3` a cut of that size always exists once some color
//!   pair has two or more edges).
//! * [`vertex_cover_instance`]: a multiedge cut of size at most `n + k` exists
//!   iff the source has a vertex cover of size at most k; lifetime 2.

mod clique;
mod independent_set;
pub mod truth;
mod vertex_cover;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{TemporalGraph, Vertex};
use crate::io::GraphDocument;
use crate::multigraph::MGraph;
use crate::walk::TemporalWalk;

pub use clique::clique_instance;
pub use independent_set::independent_set_instance;
pub use vertex_cover::vertex_cover_instance;

/// Source graphs above this size get no exhaustive ground truth in the manifest.
pub const GROUND_TRUTH_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GadgetKind {
    IndependentSet,
    Clique,
    VertexCover,
}

/// The question a gadget encodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "type", content = "value")]
pub enum Question {
    /// At least this many snapshot-disjoint paths.
    DisjointPaths(usize),
    /// A snapshot cut of at most this size.
    SnapshotCut(usize),
    /// A multiedge cut of at most this size.
    MultiedgeCut(usize),
}

#[derive(Clone, Debug)]
pub struct Gadget {
    pub kind: GadgetKind,
    pub graph: TemporalGraph,
    pub s: Vertex,
    pub z: Vertex,
    pub question: Question,
    /// Named paths the construction promises to be temporal paths (`Q_u`, `P_ℓ`).
    pub designated: Vec<(String, TemporalWalk)>,
    pub manifest: Manifest,
}

#[derive(Clone, Debug, Serialize)]
pub struct SourceRecord {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

/// Self-description written next to a generated instance.
#[derive(Clone, Debug, Serialize)]
pub struct Manifest {
    pub kind: GadgetKind,
    pub source: SourceRecord,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<BTreeMap<String, usize>>,
    pub question: Question,
    /// Source-side answer from exhaustive search, when the source is small enough.
    pub ground_truth: Option<bool>,
    pub vertices: usize,
    pub edges: usize,
    pub lifetime: u32,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Gadget {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn new(
        kind: GadgetKind,
        source: &MGraph,
        k: usize,
        coloring: Option<&[usize]>,
        graph: TemporalGraph,
        question: Question,
        designated: Vec<(String, TemporalWalk)>,
        ground_truth: Option<bool>,
        notes: Vec<String>,
    ) -> Self {
        let s = graph.vertex("s").expect("gadget has s");
        let z = graph.vertex("z").expect("gadget has z");
        let manifest = Manifest {
            kind,
            source: SourceRecord {
                vertices: source.names().to_vec(),
                edges: source
                    .multiedges()
                    .map(|((a, b), _)| (source.name(a).to_string(), source.name(b).to_string()))
                    .collect(),
            },
            k,
            coloring: coloring.map(|c| {
                c.iter()
                    .enumerate()
                    .map(|(v, &c)| (source.name(v).to_string(), c))
                    .collect()
            }),
            question,
            ground_truth,
            vertices: graph.vertex_count(),
            edges: graph.edge_count(),
            lifetime: graph.lifetime(),
            notes,
        };
        Self {
            kind,
            graph,
            s,
            z,
            question,
            designated,
            manifest,
        }
    }

    /// The instance in the structured format, with `s` and `z` recorded.
    pub fn document(&self) -> GraphDocument {
        let mut doc = GraphDocument::from_graph(&self.graph);
        doc.name = Some(format!("{:?}", self.kind));
        doc.s = Some("s".into());
        doc.z = Some("z".into());
        doc
    }

    pub fn manifest_json(&self) -> String {
        serde_json::to_string_pretty(&self.manifest).expect("manifest serializes")
    }
}

pub(crate) fn require_simple(g: &MGraph) -> Result<()> {
    if g.is_simple() {
        Ok(())
    } else {
        Err(Error::InvalidInput("source graph must be simple".into()))
    }
}

/// Parses a source graph: `u v` per line for an edge, a lone token for an
/// isolated vertex, `#` for comments.
pub fn parse_source_graph(text: &str) -> Result<MGraph> {
    let mut g = MGraph::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: i + 1, message };
        match line.split_whitespace().collect::<Vec<_>>().as_slice() {
            [v] => {
                g.add_vertex(v);
            }
            [u, v] => {
                let (a, b) = (g.add_vertex(u), g.add_vertex(v));
                if a == b {
                    return Err(err(format!("loop at `{u}`")));
                }
                g.set_multiplicity(a, b, 1);
            }
            _ => return Err(err(format!("expected `u v` or `v`, got `{line}`"))),
        }
    }
    Ok(g)
}

/// Parses a coloring given as `v=c` pairs separated by commas or whitespace.
pub fn parse_coloring(g: &MGraph, text: &str) -> Result<Vec<usize>> {
    let mut coloring = vec![usize::MAX; g.vertex_count()];
    for item in text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
    {
        let (v, c) = item
            .split_once('=')
            .ok_or_else(|| Error::InvalidInput(format!("expected `vertex=color`, got `{item}`")))?;
        let c: usize = c.parse().map_err(|_| Error::InvalidInput(format!("bad color `{c}`")))?;
        coloring[g.vertex(v)?] = c;
    }
    if let Some(v) = coloring.iter().position(|&c| c == usize::MAX) {
        return Err(Error::ImproperColoring(format!("vertex `{}` has no color", g.name(v))));
    }
    Ok(coloring)
}
