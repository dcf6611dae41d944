use serde::Serialize;

use super::{audit_counts, long_face_or_midcycle, reduce_glue, AbcStatus, AuditReport, Descent};
use super::{DescentOutcome, LabError, Result, THEOREM_SLACK};
use crate::connectivity::{connectivity_level, ConnectivityLevel};
use crate::embedding::{Embedding, FaceId};
use crate::spectrum::{
    circumference_of_embedding, exists_cycle_in_range, CycleWitness, IntervalOutcome, IntervalResult,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum PipelineOutcome {
    MidCycle { stage: &'static str, witness: CycleWitness },
    Contradiction { failed_lines: Vec<&'static str>, audit: Box<AuditReport> },
    HypothesisFailed { reason: String },
}

/// The direct search for a cycle in the window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DirectCheck {
    /// `face` when a facial cycle already lies in the window, else `search`.
    pub method: &'static str,
    #[serde(flatten)]
    pub result: IntervalResult,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionSummary {
    pub marker_face: FaceId,
    pub glue_steps: usize,
    pub vertices: usize,
    pub edges: usize,
    pub properties: AbcStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineRecord {
    /// Search of `[k, 2k]`, the reduction lemma's hypothesis.
    pub hypothesis: IntervalResult,
    pub start_length: Option<usize>,
    pub descent: Option<Descent>,
    pub reduction: Option<ReductionSummary>,
    pub audit: Option<AuditReport>,
    pub outcome: PipelineOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub k: usize,
    pub window: (usize, usize),
    pub circumference_bound: usize,
    pub direct: DirectCheck,
    pub pipeline: Option<PipelineRecord>,
    pub outcome: PipelineOutcome,
}

/// Checks that `g` has a cycle with length in `[k, 2k+9]`.
///
/// The direct check looks at the faces first and then runs the interval
/// search. With `pipeline` set, the proof steps also run in order:
/// hypothesis check, long-face descent, gluing reduction and the counting
/// audit. They run as well when the direct check fails to find a cycle.
pub fn verify_interval_theorem(g: &Embedding, k: usize, budget: u64, pipeline: bool) -> Result<VerifyReport> {
    let hi = 2 * k + THEOREM_SLACK;
    let faces = g.faces();
    let longest_face = faces.ids().filter_map(|f| CycleWitness::from_face(g, &faces, f)).max_by_key(CycleWitness::len);
    let circumference_bound = match longest_face {
        Some(ref w) if w.len() >= k => w.len(),
        _ => {
            let c = circumference_of_embedding(g, budget)?;
            if c.lower_bound < k {
                return Err(if c.exact {
                    LabError::CircumferenceTooSmall { bound: c.lower_bound, k }
                } else {
                    LabError::BudgetExhausted("circumference")
                });
            }
            c.lower_bound
        }
    };

    let in_window = faces
        .ids()
        .filter(|&f| (k..=hi).contains(&faces.face_len(f)))
        .find_map(|f| CycleWitness::from_face(g, &faces, f));
    let direct = match in_window {
        Some(w) => DirectCheck {
            method: "face",
            result: IntervalResult { outcome: IntervalOutcome::Found(w), nodes_explored: 0 },
        },
        None => DirectCheck { method: "search", result: exists_cycle_in_range(&g.graph(), k, hi, budget)? },
    };

    let hypothesis_failure = {
        let graph = g.graph();
        if !g.is_cubic() {
            Some("graph is not cubic".to_string())
        } else if connectivity_level(&graph) < ConnectivityLevel::AtLeastThree {
            Some("graph is not 3-connected".to_string())
        } else {
            None
        }
    };
    let found = match &direct.result.outcome {
        IntervalOutcome::Found(w) => Some(w.clone()),
        _ => None,
    };
    let record = if pipeline || found.is_none() { Some(run_pipeline(g, k, budget, longest_face)?) } else { None };
    let outcome = match (hypothesis_failure, found, &record) {
        (Some(reason), _, _) => PipelineOutcome::HypothesisFailed { reason },
        (None, Some(witness), _) => PipelineOutcome::MidCycle { stage: "direct", witness },
        (None, None, Some(r)) => {
            if direct.result.outcome == IntervalOutcome::Unknown
                && !matches!(r.outcome, PipelineOutcome::MidCycle { .. })
            {
                return Err(LabError::BudgetExhausted("direct search"));
            }
            r.outcome.clone()
        }
        (None, None, None) => unreachable!("pipeline runs whenever the direct check finds nothing"),
    };
    Ok(VerifyReport { k, window: (k, hi), circumference_bound, direct, pipeline: record, outcome })
}

fn run_pipeline(g: &Embedding, k: usize, budget: u64, longest_face: Option<CycleWitness>) -> Result<PipelineRecord> {
    let hi = 2 * k + THEOREM_SLACK;
    let hypothesis = exists_cycle_in_range(&g.graph(), k, 2 * k, budget)?;
    let mut record = PipelineRecord {
        hypothesis: hypothesis.clone(),
        start_length: None,
        descent: None,
        reduction: None,
        audit: None,
        outcome: PipelineOutcome::HypothesisFailed { reason: String::new() },
    };
    match hypothesis.outcome {
        IntervalOutcome::Found(witness) => {
            record.outcome = PipelineOutcome::MidCycle { stage: "hypothesis", witness };
            return Ok(record);
        }
        IntervalOutcome::Unknown => return Err(LabError::BudgetExhausted("hypothesis check")),
        IntervalOutcome::Empty => {}
    }

    let start = match longest_face {
        Some(w) if w.len() > hi => w,
        _ => {
            let c = circumference_of_embedding(g, budget)?;
            if c.witness.len() < k {
                return Err(LabError::CircumferenceTooSmall { bound: c.witness.len(), k });
            }
            c.witness
        }
    };
    record.start_length = Some(start.len());
    let descent = long_face_or_midcycle(g, k, THEOREM_SLACK, &start)?;
    record.descent = Some(descent.clone());
    let marker = match descent.outcome {
        DescentOutcome::MidCycle { witness } => {
            record.outcome = PipelineOutcome::MidCycle { stage: "descent", witness };
            return Ok(record);
        }
        DescentOutcome::LongFace { face, .. } => face,
    };

    let reduction = reduce_glue(g, k, marker)?;
    record.reduction = Some(ReductionSummary {
        marker_face: marker,
        glue_steps: reduction.glue_log.len(),
        vertices: reduction.reduced.vertex_count(),
        edges: reduction.reduced.edge_count(),
        properties: reduction.properties,
    });
    if !reduction.properties.all() {
        record.outcome =
            PipelineOutcome::HypothesisFailed { reason: format!("reduction properties {:?}", reduction.properties) };
        return Ok(record);
    }

    let audit = audit_counts(&reduction.reduced, k)?;
    record.audit = Some(audit.clone());
    let reduced_faces = reduction.reduced.faces();
    let mid = audit.mid_faces.iter().find_map(|m| CycleWitness::from_face(&reduction.reduced, &reduced_faces, m.face));
    record.outcome = if let Some(w) = mid {
        let vertices = w.vertices.iter().map(|&v| reduction.vertex_origin[v]).collect();
        let edges = reduction.lift_edges(&w.edges);
        PipelineOutcome::MidCycle { stage: "audit", witness: CycleWitness::new(vertices, edges) }
    } else if audit.fully_consistent() {
        return Err(LabError::ConsistentAudit(Box::new(audit)));
    } else {
        PipelineOutcome::Contradiction { failed_lines: audit.failed_lines(), audit: Box::new(audit) }
    };
    Ok(record)
}
