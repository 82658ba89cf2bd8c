use crate::finders::TrialRecord;
use crate::graph::{ClassKind, ColorId, Edge};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("vertex count must be at least 1")]
    NoVertices,
    #[error("class {class} is empty")]
    EmptyClass { class: ColorId },
    #[error("class {class}: self-loop at vertex {vertex}")]
    SelfLoop { class: ColorId, vertex: usize },
    #[error("class {class}: vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { class: ColorId, vertex: usize, n: usize },
    #[error("class {class}: edge {edge} listed twice")]
    DuplicateEdge { class: ColorId, edge: Edge },
    #[error("class {class}: edge {edge} already belongs to class {other}")]
    ClassOverlap { class: ColorId, other: ColorId, edge: Edge },

    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("vertex {0} repeated in cycle")]
    RepeatedVertex(usize),
    #[error("no edge {0} in graph")]
    MissingEdge(Edge),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("generator precondition: {0}")]
    Generator(String),
    #[error("could not place {kind} classes within the retry cap ({placed} of {requested} placed)")]
    GenerationFailed { kind: ClassKind, placed: usize, requested: usize },

    #[error("edge list: {0}")]
    InvalidEdgeList(String),
    #[error("input graph is acyclic")]
    Acyclic,

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("class {class} has kind {found}, expected one of {expected}")]
    WrongKind { class: ColorId, found: ClassKind, expected: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("retries exhausted after {} trials", trials.len())]
    RetriesExhausted { trials: Vec<TrialRecord> },
    #[error("cannot repair cycle: {0}")]
    Repair(String),

    #[error("experiment spec: {0}")]
    Spec(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
