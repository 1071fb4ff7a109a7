//! Odd colourings of graphs: partitions of the vertex set into classes that
//! each induce a subgraph in which every vertex has odd degree.
//!
//! The crate bundles constructive colouring algorithms for several graph
//! classes, a certificate verifier, and an exact exponential-time oracle.

pub mod bitset;
pub mod classes;
pub mod cli;
pub mod colouring;
pub mod error;
pub mod exact;
pub mod gallai;
pub mod generators;
pub mod gf2;
pub mod graph;
pub mod interval;
pub mod io;
pub mod modular;
pub mod verify;

pub use bitset::VertexSet;
pub use colouring::Colouring;
pub use error::{Error, Result};
pub use graph::Graph;
