//! Domination in central graphs.
//!
//! The central graph `C(G)` subdivides every edge of `G` once and joins every
//! pair of non-adjacent vertices. This crate computes `γ(C(G))` exactly, the
//! auxiliary invariants `τ`, `α`, `h`, `f` and good covers that determine it,
//! and classifies every graph into one of three classes according to whether
//! `γ(C(G))` equals `τ(G)` or `τ(G) + 1`.

pub mod central;
pub mod classify;
pub mod corpus;
pub mod format;
pub mod generators;
pub mod graph;
pub mod solvers;
pub mod vset;

pub use central::{central, central_complement, CentralGraph};
pub use classify::{classify, ClassTag, ClassificationReport, ClassifyError};
pub use graph::{Graph, GraphError};
pub use solvers::{InvariantWitness, SolverConfig, SolverError};
pub use vset::VertexSet;
