//! File formats and the fixture corpus.
//!
//! Embedded graphs travel as planar_code (plantri's binary format) or JSON.
//! graph6 carries no embedding and is accepted only where an abstract graph
//! suffices.

pub mod corpus;
pub mod graph6;
pub mod json;
pub mod planar_code;

use thiserror::Error;

use crate::embedding::{Embedding, EmbeddingError};
use crate::graph::Graph;

pub use corpus::{load_dir, standard_corpus, CorpusEntry, Source};
pub use graph6::{decode_graph6, encode_graph6};
pub use json::{embedding_from_json, embedding_to_json, embeddings_from_json};
pub use planar_code::{parse_planar_code, write_planar_code, PLANAR_CODE_HEADER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("missing or malformed planar_code header")]
    BadHeader,
    #[error("record {0} ends early")]
    TruncatedRecord(usize),
    #[error("graph has {0} vertices; planar_code records hold at most 255")]
    TooLarge(usize),
    #[error("parallel edges whose pairing is not the default cannot be written as planar_code")]
    AmbiguousTwins,
    #[error("schema violation: {0}")]
    SchemaViolation(String),
    #[error("bad graph6 line {line}: {reason}")]
    BadGraph6 { line: usize, reason: String },
    #[error("input has no embedding (graph6)")]
    NotEmbedded,
    #[error("record {index}: {source}")]
    Embedding { index: usize, source: EmbeddingError },
    #[error("{0}")]
    Io(String),
}

/// Parsed input of unknown format.
#[derive(Debug, Clone)]
pub enum Loaded {
    Embedded(Vec<Embedding>),
    Abstract(Vec<Graph>),
}

impl Loaded {
    pub fn graphs(&self) -> Vec<Graph> {
        match self {
            Loaded::Embedded(es) => es.iter().map(Embedding::graph).collect(),
            Loaded::Abstract(gs) => gs.clone(),
        }
    }

    pub fn embeddings(self) -> Result<Vec<Embedding>, FormatError> {
        match self {
            Loaded::Embedded(es) => Ok(es),
            Loaded::Abstract(_) => Err(FormatError::NotEmbedded),
        }
    }
}

/// Picks the format from the content: planar_code by its header, JSON by a
/// leading `{` or `[`, graph6 otherwise.
pub fn load_bytes(bytes: &[u8]) -> Result<Loaded, FormatError> {
    if bytes.starts_with(PLANAR_CODE_HEADER) {
        return parse_planar_code(bytes).map(Loaded::Embedded);
    }
    let text = std::str::from_utf8(bytes).map_err(|_| FormatError::BadHeader)?;
    match text.trim_start().chars().next() {
        Some('{') | Some('[') => embeddings_from_json(text).map(Loaded::Embedded),
        _ => decode_graph6(text).map(Loaded::Abstract),
    }
}
