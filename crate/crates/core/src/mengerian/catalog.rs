//! The five forbidden graphs M1 to M5, each with a bad timefunction and a
//! designated pair `s`, `z` where fewer disjoint paths exist than a cut needs.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Label, TemporalGraph, Vertex};
use crate::io::GraphDocument;
use crate::multigraph::MGraph;
use crate::oracles::{brute_force_c, brute_force_p, PATH_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum MinorName {
    M1,
    M2,
    M3,
    M4,
    M5,
}

impl MinorName {
    pub const ALL: [MinorName; 5] = [Self::M1, Self::M2, Self::M3, Self::M4, Self::M5];
}

impl fmt::Display for MinorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for MinorName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInput(format!("unknown minor `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: MinorName,
    pub graph: TemporalGraph,
    pub s: Vertex,
    pub z: Vertex,
}

impl CatalogEntry {
    pub fn pattern(&self) -> MGraph {
        self.graph.base()
    }
}

const SOURCES: [&str; 5] = [
    include_str!("../../data/catalog/M1.json"),
    include_str!("../../data/catalog/M2.json"),
    include_str!("../../data/catalog/M3.json"),
    include_str!("../../data/catalog/M4.json"),
    include_str!("../../data/catalog/M5.json"),
];

/// Parses a catalog document; `s` and `z` default to the vertices named so.
pub fn parse_entry(name: MinorName, text: &str) -> Result<CatalogEntry> {
    let doc: GraphDocument = serde_json::from_str(text)?;
    let graph = doc.to_graph()?;
    let s = graph.vertex(doc.s.as_deref().unwrap_or("s"))?;
    let z = graph.vertex(doc.z.as_deref().unwrap_or("z"))?;
    Ok(CatalogEntry { name, graph, s, z })
}

fn all() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        MinorName::ALL
            .iter()
            .zip(SOURCES)
            .map(|(&m, text)| parse_entry(m, text).expect("bundled catalog parses"))
            .collect()
    })
}

pub fn entry(name: MinorName) -> CatalogEntry {
    all()[name as usize].clone()
}

pub fn entries() -> &'static [CatalogEntry] {
    all()
}

/// The unlabeled multigraph of an entry.
pub fn pattern(name: MinorName) -> MGraph {
    all()[name as usize].pattern()
}

/// Outcome of checking one entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryCheck {
    pub name: MinorName,
    pub p: usize,
    pub c: usize,
}

/// Checks `p < c` under the stored labeling and the structural facts that the
/// non-Mengerian proofs rely on: in M1 to M4 the source has exactly two edges,
/// labeled 1 and 2, and every edge at `z` is active at 2 or 3; in M5 the
/// source has an edge at 3 and every edge at `z` is active at 3 or 4.
pub fn verify_entry(e: &CatalogEntry) -> Result<EntryCheck> {
    let violation = |reason: String| Error::CatalogViolation {
        entry: e.name.to_string(),
        reason,
    };
    let labels_at = |v: Vertex| -> Vec<Label> {
        let mut ls: Vec<Label> = e.graph.incident(v).iter().map(|&i| e.graph.label(i)).collect();
        ls.sort_unstable();
        ls
    };
    let at_s = labels_at(e.s);
    let at_z = labels_at(e.z);
    let (z_allowed, name) = match e.name {
        MinorName::M5 => ([3, 4], "3 or 4"),
        _ => ([2, 3], "2 or 3"),
    };
    if e.name == MinorName::M5 {
        if !at_s.contains(&3) {
            return Err(violation(format!("no edge at s is active at 3 (labels {at_s:?})")));
        }
    } else if at_s != [1, 2] {
        return Err(violation(format!(
            "edges at s must be labeled exactly 1 and 2, found {at_s:?}"
        )));
    }
    if let Some(t) = at_z.iter().find(|t| !z_allowed.contains(t)) {
        return Err(violation(format!("edge at z active at {t}, expected {name}")));
    }
    let p = brute_force_p(&e.graph, e.s, e.z, PATH_LIMIT)?.value;
    let c = brute_force_c(&e.graph, e.s, e.z, PATH_LIMIT)?.value;
    if p >= c {
        return Err(violation(format!("p = {p} is not below c = {c}")));
    }
    Ok(EntryCheck { name: e.name, p, c })
}

/// Verifies all five entries, stopping at the first violation.
pub fn verify_catalog() -> Result<Vec<EntryCheck>> {
    all().iter().map(verify_entry).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_verifies() {
        let report = verify_catalog().unwrap();
        assert_eq!(report.len(), 5);
        assert!(report.iter().all(|r| r.p < r.c));
    }

    #[test]
    fn names_round_trip() {
        for m in MinorName::ALL {
            assert_eq!(m.to_string().parse::<MinorName>().unwrap(), m);
        }
        assert!("M6".parse::<MinorName>().is_err());
    }

    #[test]
    fn injective_relabeling_is_caught() {
        let mut e = entry(MinorName::M1);
        let mut next = 0;
        let mut g = TemporalGraph::new();
        for n in e.graph.names() {
            g.add_vertex(n);
        }
        for edge in e.graph.edges() {
            next += 1;
            g.add_edge_between(edge.u, edge.v, next).unwrap();
        }
        e.graph = g;
        assert!(matches!(verify_entry(&e), Err(Error::CatalogViolation { .. })));
    }

    #[test]
    fn equal_labels_are_caught() {
        let mut e = entry(MinorName::M1);
        let mut g = TemporalGraph::new();
        for n in e.graph.names() {
            g.add_vertex(n);
        }
        // one label per multiedge copy; parallel copies must still differ
        for edge in e.graph.edges() {
            let t = if g.find_edge(edge.u, edge.v, 1).is_some() { 2 } else { 1 };
            g.add_edge_between(edge.u, edge.v, t).unwrap();
        }
        e.graph = g;
        assert!(verify_entry(&e).is_err());
    }
}
