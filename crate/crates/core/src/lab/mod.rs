//! Executable versions of the long-face lemma, the face-gluing reduction
//! and the counting argument, plus an end-to-end check of the interval
//! theorem on concrete graphs.
//!
//! The procedures do not assume their hypotheses hold. Hypothesis checks
//! are separate calls, so each step can be run diagnostically on any
//! plane graph.

mod audit;
mod descent;
mod reduce;
mod verify;

use thiserror::Error;

pub use audit::{audit_counts, AuditLine, AuditReport, FaceClass, MidFace, Relation};
pub use descent::{interior_faces, long_face_or_midcycle, Descent, DescentOutcome, Sides};
pub use reduce::{check_abc, reduce_glue, AbcStatus, GlueStep, ReductionResult};
pub use verify::{
    verify_interval_theorem, DirectCheck, PipelineOutcome, PipelineRecord, ReductionSummary, VerifyReport,
};

use crate::embedding::{EdgeId, EmbeddingError, FaceId};
use crate::spectrum::SpectrumError;

/// Extra length allowed above `2k` by the interval theorem.
pub const THEOREM_SLACK: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("start cycle is invalid or shorter than {0}")]
    BadStart(usize),
    #[error("no edge of the current cycle leaves a single cycle (cycle edges {cycle:?}, interior faces {interior:?})")]
    NoSingleCycleEdge { cycle: Vec<EdgeId>, interior: Vec<FaceId> },
    #[error("interior face count did not decrease ({before} -> {after})")]
    NoProgress { before: usize, after: usize },
    #[error("marker face has length {length}, needs at least {needed}")]
    MarkerTooShort { length: usize, needed: usize },
    #[error("unknown face {0}")]
    UnknownFace(FaceId),
    #[error("a marker edge was deleted")]
    MarkerDestroyed,
    #[error("circumference is {bound}, below k = {k}")]
    CircumferenceTooSmall { bound: usize, k: usize },
    #[error("search budget exhausted during {0}")]
    BudgetExhausted(&'static str),
    #[error("audit is fully consistent, which the interval theorem rules out")]
    ConsistentAudit(Box<AuditReport>),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

pub type Result<T> = std::result::Result<T, LabError>;
