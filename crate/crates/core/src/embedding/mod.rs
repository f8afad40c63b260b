//! Abstract and plane graphs: embeddings, faces, planarity, canonical forms
//! and serialization.

pub mod canon;
pub mod io;
pub mod planarity;
pub mod plane;

pub use canon::{are_isomorphic, canonical_form, canonical_graph, canonical_labeling};
pub use io::{from_graph6, from_sparse6, to_graph6, to_sparse6};
pub use planarity::{embed, is_planar, KuratowskiKind, KuratowskiWitness};
pub use plane::{from_drawing, Dart, Face, Faces, PlaneGraph};
