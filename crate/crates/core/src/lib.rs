//! Cycle spectra of cubic plane graphs.
//!
//! The crate is organised around [`Embedding`], a rotation system over
//! darts. On top of it sit the graph families with prescribed gaps
//! ([`constructions`]), exact and budgeted cycle searches ([`spectrum`]),
//! executable forms of the face-gluing and counting arguments ([`lab`]) and
//! file formats ([`io`]).

pub mod canon;
pub mod connectivity;
pub mod constructions;
pub mod embedding;
pub mod graph;
pub mod io;
pub mod lab;
pub mod spectrum;
pub mod suppress;

pub use canon::{canonical_code, fingerprint};
pub use connectivity::{connectivity_level, two_edge_cuts, ConnectivityLevel, TwoEdgeCuts};
pub use embedding::{
    component_containing, Component, DartId, EdgeId, Embedding, EmbeddingError, FaceAdjacency, FaceId, FaceMap,
    VertexId,
};
pub use graph::Graph;
pub use spectrum::CycleWitness;
pub use suppress::{suppress_degree2, SuppressionMap};
