//! Generators for every graph family used by the laboratory.

mod families;
mod gadget;
mod geometry;
mod random;

use thiserror::Error;

use crate::embedding::{EdgeId, EmbeddingError};

pub use families::{
    catalog, gnk_meets_hypothesis, make_dn, make_fan_ring, make_gnk, prism, triangle_expand, DnFrame, CATALOG_NAMES,
};
pub use gadget::{make_hk, replace_edge, replace_edge_mapped, replace_matching, GadgetAttachment};
pub use random::random_c3cp;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("graph is not cubic")]
    NotCubic,
    #[error("edge {0} is a loop")]
    LoopEdge(EdgeId),
    #[error("gadget ports do not fit the replaced edge")]
    PortMismatch,
    #[error("edge set is not a matching")]
    NotAMatching,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("unknown catalog graph {0:?}")]
    UnknownName(String),
    #[error("random growth stalled at {0} vertices")]
    Stalled(usize),
    #[error("replacement broke 3-connectivity")]
    LostConnectivity,
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

pub type Result<T> = std::result::Result<T, ConstructionError>;
