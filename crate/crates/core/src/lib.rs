//! Proper connection numbers of small graphs.
//!
//! An edge coloring is a proper-path coloring when every pair of vertices
//! is joined by a path whose consecutive edges have different colors; the
//! proper connection number `pc(G)` is the fewest colors such a coloring
//! can use. This crate computes `pc(G)` exactly by exhaustive search,
//! builds colorings from connected dominating sets and from interval and
//! circular-arc structure, and checks the known bounds over graph corpora.

pub mod campaign;
pub mod classes;
pub mod coloring;
pub mod constructions;
pub mod domination;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod graph;
pub mod io;

pub use coloring::{ColorId, EdgeColoring, Verdict, WitnessPath};
pub use error::{Error, Result};
pub use exact::{Budget, PcResult};
pub use graph::{Distance, Graph, VertexId, VertexSet};
