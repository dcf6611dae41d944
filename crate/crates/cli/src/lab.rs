//! Commands that run the proof procedures on embedded graphs.

use std::path::Path;

use cycle_spectra::lab::{audit_counts, reduce_glue, verify_interval_theorem, LabError, PipelineOutcome};
use cycle_spectra::Embedding;
use serde_json::json;

use crate::input::{encode, format_for, write_bytes, Input};
use crate::report::{cycle, Exit, Failure, Printer};

fn embedding(input: &Input) -> &Embedding {
    input.embedding.as_ref().expect("loaded with load_embedded")
}

fn error_body(e: &LabError) -> serde_json::Value {
    json!({ "outcome": "error", "error": e.to_string() })
}

pub fn reduce(inputs: &[Input], k: usize, marker: usize, output: Option<&Path>, json: bool) -> Result<Exit, Failure> {
    let out = Printer::new(json, inputs.len());
    let mut codes = Vec::new();
    let mut reduced = Vec::new();
    for (i, input) in inputs.iter().enumerate() {
        let params = json!({ "k": k, "marker": marker });
        let r = match reduce_glue(embedding(input), k, marker) {
            Ok(r) => r,
            Err(e) => {
                out.emit(i, input.fingerprint.as_deref(), "reduce", params, error_body(&e), &format!("error: {e}"));
                codes.push(Exit::Usage);
                continue;
            }
        };
        let p = r.properties;
        let mut text = format!(
            "glue steps: {}\nreduced: {} vertices, {} edges\nmarker face after reduction: {}\nA {} B {} C {} 2-connected {}",
            r.glue_log.len(),
            r.reduced.vertex_count(),
            r.reduced.edge_count(),
            r.marker_face.map_or("none".to_string(), |f| f.to_string()),
            p.a,
            p.b,
            p.c,
            p.two_connected
        );
        for s in &r.glue_log {
            text.push_str(&format!(
                "\nglue faces {} {} (lengths {} {}): deleted edges {}",
                s.faces.0,
                s.faces.1,
                s.lengths.0,
                s.lengths.1,
                cycle(&s.deleted)
            ));
        }
        let body = json!({
            "outcome": if p.all() { "holds" } else { "fails" },
            "properties": p,
            "glue_log": r.glue_log,
            "reduced_vertices": r.reduced.vertex_count(),
            "reduced_edges": r.reduced.edge_count(),
            "reduced_fingerprint": cycle_spectra::fingerprint(&r.reduced),
            "marker_face": r.marker_face,
            "vertex_origin": r.vertex_origin,
            "edge_origin": r.edge_origin,
        });
        out.emit(i, input.fingerprint.as_deref(), "reduce", params, body, &text);
        codes.push(if p.all() { Exit::Ok } else { Exit::Refuted });
        reduced.push(r.reduced);
    }
    if let Some(path) = output {
        let refs: Vec<&Embedding> = reduced.iter().collect();
        write_bytes(&encode(&refs, format_for(Some(path)))?, Some(path))?;
    }
    Ok(Exit::all(codes))
}

pub fn audit(inputs: &[Input], k: usize, json: bool) -> Result<Exit, Failure> {
    let out = Printer::new(json, inputs.len());
    let mut codes = Vec::new();
    for (i, input) in inputs.iter().enumerate() {
        let params = json!({ "k": k });
        match audit_counts(embedding(input), k) {
            Ok(r) => {
                let mut text = format!("n {} x {} y {} mid {}", r.n, r.x, r.y, r.mid_faces.len());
                for m in &r.mid_faces {
                    text.push_str(&format!("\nmid face {}: length {} ({} in H)", m.face, m.length, m.length_in_h));
                }
                for l in &r.lines {
                    let rel = serde_json::to_value(l.relation).expect("relation serializes");
                    text.push_str(&format!(
                        "\n{:<9} {:<40} {} {} {}  {}",
                        l.name,
                        l.statement,
                        l.lhs,
                        rel.as_str().unwrap_or("?"),
                        l.rhs,
                        if l.holds { "holds" } else { "fails" }
                    ));
                }
                out.emit(i, input.fingerprint.as_deref(), "audit", params, &r, &text);
                codes.push(Exit::Ok);
            }
            Err(e) => {
                out.emit(i, input.fingerprint.as_deref(), "audit", params, error_body(&e), &format!("error: {e}"));
                codes.push(Exit::Usage);
            }
        }
    }
    Ok(Exit::all(codes))
}

fn lab_exit(e: &LabError) -> Exit {
    match e {
        LabError::BudgetExhausted(_) => Exit::Unknown,
        LabError::ConsistentAudit(_)
        | LabError::NoSingleCycleEdge { .. }
        | LabError::NoProgress { .. }
        | LabError::MarkerDestroyed => Exit::Refuted,
        _ => Exit::Usage,
    }
}

pub fn verify(inputs: &[Input], k: usize, pipeline: bool, budget: u64, json: bool) -> Result<Exit, Failure> {
    let out = Printer::new(json, inputs.len());
    let mut codes = Vec::new();
    for (i, input) in inputs.iter().enumerate() {
        let params = json!({ "k": k, "pipeline": pipeline, "budget": budget });
        let r = match verify_interval_theorem(embedding(input), k, budget, pipeline) {
            Ok(r) => r,
            Err(e) => {
                out.emit(i, input.fingerprint.as_deref(), "verify", params, error_body(&e), &format!("error: {e}"));
                codes.push(lab_exit(&e));
                continue;
            }
        };
        let (lo, hi) = r.window;
        let mut text = format!("window [{lo}, {hi}], circumference at least {}", r.circumference_bound);
        text.push_str(&format!("\ndirect ({}): {}", r.direct.method, describe(&r.direct.result.outcome)));
        if let Some(p) = &r.pipeline {
            text.push_str(&format!("\nhypothesis [{k}, {}]: {}", 2 * k, describe(&p.hypothesis.outcome)));
            if let Some(s) = p.start_length {
                text.push_str(&format!("\nstart cycle length {s}"));
            }
            if let Some(d) = &p.descent {
                text.push_str(&format!("\ndescent interior counts {}", cycle(&d.interior_counts)));
            }
            if let Some(red) = &p.reduction {
                text.push_str(&format!(
                    "\nreduction: {} glue steps, {} vertices, {} edges",
                    red.glue_steps, red.vertices, red.edges
                ));
            }
            text.push_str(&format!("\npipeline: {}", outcome_text(&p.outcome)));
        }
        text.push_str(&format!("\noutcome: {}", outcome_text(&r.outcome)));
        let code = match &r.outcome {
            PipelineOutcome::MidCycle { .. } => Exit::Ok,
            PipelineOutcome::Contradiction { .. } => Exit::Refuted,
            PipelineOutcome::HypothesisFailed { .. } => Exit::Usage,
        };
        out.emit(i, input.fingerprint.as_deref(), "verify", params, &r, &text);
        codes.push(code);
    }
    Ok(Exit::all(codes))
}

fn describe(o: &cycle_spectra::spectrum::IntervalOutcome) -> String {
    use cycle_spectra::spectrum::IntervalOutcome::*;
    match o {
        Found(w) => format!("found length {}", w.len()),
        Empty => "empty".to_string(),
        Unknown => "unknown".to_string(),
    }
}

fn outcome_text(o: &PipelineOutcome) -> String {
    match o {
        PipelineOutcome::MidCycle { stage, witness } => {
            format!("mid cycle of length {} ({stage}): {}", witness.len(), cycle(&witness.vertices))
        }
        PipelineOutcome::Contradiction { failed_lines, .. } => {
            format!("contradiction, failed lines {}", failed_lines.join(" "))
        }
        PipelineOutcome::HypothesisFailed { reason } => format!("hypothesis failed: {reason}"),
    }
}
