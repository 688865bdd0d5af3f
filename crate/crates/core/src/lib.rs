//! Canonical decomposition of 4-connected graphs along totally-nested
//! tetra-separations, with torso classification, the lower-connectivity
//! pipeline stages, generators for the named graph families, and
//! brute-force oracles that independently verify the structural claims at
//! desk scale.

pub mod classic;
pub mod connectivity;
pub mod decomp;
pub mod error;
pub mod generate;
pub mod graph;
pub mod recognize;
pub mod separation;
pub mod tetra;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
pub use separation::MixedSeparation;
pub use tetra::{EnumBounds, NestednessMethod, TetraSeparation};
