//! Small-graph toolkit for spectral extremal problems under minor exclusion.
//!
//! Everything is built around [`Graph`], an immutable undirected simple graph
//! on at most 64 labeled vertices with one `u64` adjacency row per vertex.
//! On top of that sit exact minor containment with witness models, the family
//! invariants γ/α/Γ*, generators for the named extremal constructions,
//! spectral-radius computation with certificates, linear-path decompositions,
//! and exhaustive isomorph-free searches (`spex`, `ex`, `sat`) over small
//! orders.

pub mod canon;
pub mod constructions;
pub mod decompose;
mod error;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod minor;
pub mod search;
pub mod spectral;

pub use error::Error;
pub use graph::{Graph, VertexSet, MAX_VERTICES};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
