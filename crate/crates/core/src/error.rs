use thiserror::Error;

use crate::graph::Label;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge id {0}")]
    UnknownEdge(u64),
    #[error("edge {edge} is not incident to vertex `{vertex}` at walk position {index}")]
    NonIncident { index: usize, edge: u64, vertex: String },
    #[error("label decreases at walk position {index}")]
    DecreasingLabel { index: usize },
    #[error("malformed walk: {0}")]
    MalformedWalk(String),
    #[error("edge {u}-{v} is a loop")]
    SelfLoop { u: String, v: String },
    #[error("parallel edges {u}-{v} share label {label}")]
    DuplicateLabel { u: String, v: String, label: Label },
    #[error("duplicate edge id {0}")]
    DuplicateEdgeId(u64),
    #[error("labels must be positive (edge {0})")]
    ZeroLabel(u64),
    #[error("no multiedge between `{0}` and `{1}`")]
    MissingMultiedge(String, String),
    #[error("more than {limit} items enumerated")]
    LimitExceeded { limit: usize },
    #[error("budget of {budget} exceeded ({needed} required)")]
    BudgetExceeded { budget: u128, needed: u128 },
    #[error("pattern with {vertices} vertices is outside the matcher's catalog range")]
    PatternTooLarge { vertices: usize },
    #[error("timefunction is not injective: label {0} is used more than once")]
    NotInjective(Label),
    #[error("catalog entry {entry} violates: {reason}")]
    CatalogViolation { entry: String, reason: String },
    #[error("coloring is not proper: {0}")]
    ImproperColoring(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
