//! Symmetry toolkit for small simple graphs.
//!
//! Builds derived graphs (line, subdivision and clique graphs), enumerates
//! s-arcs and s-geodesics, computes automorphism groups with a
//! refinement-and-backtracking search, and checks how transitivity on the
//! s-arcs of a graph relates to transitivity on the (s-1)-geodesics of its
//! line graph.

pub mod catalog;
pub mod constructions;
mod error;
pub mod graph;
pub mod graph6;
pub mod metrics;
pub mod symmetry;
pub mod verify;
pub mod walks;

pub use catalog::{catalog, CatalogName};
pub use constructions::{clique_graph, line_graph, subdivision_graph, DerivedGraph, EdgeIndex, Origin};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use metrics::{DistanceMatrix, LocalKind, LocalStructure};
pub use symmetry::{automorphisms, isomorphic, AutGroup, OrbitPartition, Permutation};
pub use walks::{LineTuple, Walk};
