//! Planar Turán toolkit: plane-graph decomposition into triangular blocks,
//! forbidden-subgraph detection, extremal families and an exhaustive small-order
//! oracle for graphs built from C3 and Theta4.

pub mod cli;
pub mod decomposition;
pub mod embedding;
pub mod error;
pub mod families;
pub mod graph;
pub mod patterns;
pub mod search;

pub use error::Error;
pub use graph::{edge, Edge, Graph};
