//! Exact solvers for independent transversal domination and the related
//! invariants of small graphs, together with machine-checkable verdicts for
//! the known theorems, characterizations and counterexamples about them.
//!
//! Graphs have at most 64 vertices and are stored as neighbour bitsets; every
//! solver is an exponential-time exact search paired with an unoptimized
//! subset-enumeration oracle in [`invariants::oracle`].

pub mod error;
pub mod graph;
pub mod invariants;
pub mod theorems;
mod vertex_set;

pub use error::{EdgeListError, Graph6Error, GraphError, SolverError};
pub use graph::{Bipartition, CatalogEntry, Graph};
pub use vertex_set::{VertexSet, MAX_ORDER};
