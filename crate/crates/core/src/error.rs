use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set is not strictly increasing")]
    UnsortedVertexSet,
    #[error("graph has no edges")]
    Edgeless,
    #[error("unknown catalog graph `{0}`")]
    UnknownCatalogName(String),
    #[error("invalid parameters for catalog graph `{name}`: {reason}")]
    InvalidCatalogParameters { name: String, reason: String },
    #[error("sequence is not a walk: {0}")]
    NotAWalk(String),
    #[error("walk is not an s-arc: {0}")]
    NotAnArc(String),
    #[error("tuple is not a geodesic of the line graph: {0}")]
    NotAGeodesic(String),
    #[error("walk length {s} must be at least {min}")]
    LengthTooSmall { s: usize, min: usize },
    #[error("geodesic length {s} exceeds the diameter {diameter}")]
    LengthExceedsDiameter { s: usize, diameter: usize },
    #[error("enumerating {count} walks exceeds the cap of {cap}")]
    TooManyWalks { count: u128, cap: u128 },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("permutation is invalid: {0}")]
    InvalidPermutation(String),
    #[error("permutation is not an automorphism: edge {{{0}, {1}}} is not preserved")]
    NotAnAutomorphism(usize, usize),
    #[error("permutation degree {found} does not match {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("{path}: {reason}")]
    Io { path: String, reason: String },
}
