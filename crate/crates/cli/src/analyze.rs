//! Commands that need only the abstract graph.

use cycle_spectra::spectrum::{
    circumference as longest_cycle, circumference_of_embedding, enumerate_spectrum, exists_cycle_in_range, gap_report,
    girth as shortest_cycle, IntervalOutcome, SpectrumError,
};
use serde_json::json;

use crate::input::Input;
use crate::report::{cycle, lengths, Exit, Failure, Printer};

pub fn spectrum(inputs: &[Input], budget: u64, json: bool) -> Result<Exit, Failure> {
    let out = Printer::new(json, inputs.len());
    let mut codes = Vec::new();
    for (i, input) in inputs.iter().enumerate() {
        let r = enumerate_spectrum(&input.graph, budget);
        let status = if r.complete { "complete" } else { "incomplete" };
        let text = format!(
            "spectrum: {}\n{status} over [{}, {}], {} nodes",
            lengths(&r.lengths()),
            r.window.0,
            r.window.1,
            r.nodes_explored
        );
        let body = json!({
            "outcome": status,
            "window": r.window,
            "lengths": r.lengths(),
            "witnesses": r.present,
            "nodes_explored": r.nodes_explored,
        });
        out.emit(i, input.fingerprint.as_deref(), "spectrum", json!({ "budget": budget }), body, &text);
        codes.push(if r.complete { Exit::Ok } else { Exit::Unknown });
    }
    Ok(Exit::all(codes))
}

pub fn check_interval(inputs: &[Input], a: usize, b: usize, budget: u64, json: bool) -> Result<Exit, Failure> {
    let out = Printer::new(json, inputs.len());
    let mut codes = Vec::new();
    for (i, input) in inputs.iter().enumerate() {
        let r = exists_cycle_in_range(&input.graph, a, b, budget).map_err(|e| Failure::Usage(e.to_string()))?;
        let (text, code) = match &r.outcome {
            IntervalOutcome::Empty => (format!("empty: no cycle length in [{a}, {b}]"), Exit::Ok),
            IntervalOutcome::Found(w) => {
                (format!("found: cycle of length {} through {}", w.len(), cycle(&w.vertices)), Exit::Refuted)
            }
            IntervalOutcome::Unknown => ("unknown: budget exhausted".to_string(), Exit::Unknown),
        };
        let text = format!("{text}\n{} nodes", r.nodes_explored);
        let params = json!({ "a": a, "b": b, "budget": budget });
        out.emit(i, input.fingerprint.as_deref(), "check-interval", params, &r, &text);
        codes.push(code);
    }
    Ok(Exit::all(codes))
}

pub fn gaps(inputs: &[Input], budget: u64, json: bool) -> Result<Exit, Failure> {
    let out = Printer::new(json, inputs.len());
    let mut codes = Vec::new();
    for (i, input) in inputs.iter().enumerate() {
        let params = json!({ "budget": budget });
        match gap_report(&input.graph, budget) {
            Ok(r) => {
                let listed: Vec<String> = r.gaps.iter().map(|(a, b)| format!("[{a},{b}]")).collect();
                let text = format!(
                    "spectrum: {}\ncircumference: {}\ngaps: {}",
                    lengths(&r.spectrum),
                    r.circumference,
                    if listed.is_empty() { "none".to_string() } else { listed.join(" ") }
                );
                let body = json!({ "outcome": "complete", "spectrum": r.spectrum, "circumference": r.circumference, "gaps": r.gaps });
                out.emit(i, input.fingerprint.as_deref(), "gaps", params, body, &text);
                codes.push(Exit::Ok);
            }
            Err(SpectrumError::SpectrumIncomplete) => {
                let body = json!({ "outcome": "unknown" });
                out.emit(i, input.fingerprint.as_deref(), "gaps", params, body, "unknown: spectrum incomplete");
                codes.push(Exit::Unknown);
            }
            Err(e) => {
                let body = json!({ "outcome": "error", "error": e.to_string() });
                out.emit(i, input.fingerprint.as_deref(), "gaps", params, body, &format!("error: {e}"));
                codes.push(Exit::Usage);
            }
        }
    }
    Ok(Exit::all(codes))
}

pub fn girth(inputs: &[Input], json: bool) -> Result<Exit, Failure> {
    let out = Printer::new(json, inputs.len());
    for (i, input) in inputs.iter().enumerate() {
        let (text, body) = match shortest_cycle(&input.graph) {
            Ok(w) => (
                format!("girth: {}\ncycle: {}", w.len(), cycle(&w.vertices)),
                json!({ "outcome": "found", "girth": w.len(), "witness": w }),
            ),
            Err(_) => ("girth: none (acyclic)".to_string(), json!({ "outcome": "acyclic", "girth": null })),
        };
        out.emit(i, input.fingerprint.as_deref(), "girth", json!({}), body, &text);
    }
    Ok(Exit::Ok)
}

pub fn circumference(inputs: &[Input], budget: u64, json: bool) -> Result<Exit, Failure> {
    let out = Printer::new(json, inputs.len());
    let mut codes = Vec::new();
    for (i, input) in inputs.iter().enumerate() {
        let result = match &input.embedding {
            Some(e) => circumference_of_embedding(e, budget),
            None => longest_cycle(&input.graph, budget),
        };
        let params = json!({ "budget": budget });
        match result {
            Ok(c) => {
                let valid = c.witness.validate(&input.graph);
                let kind = if c.exact { "exact" } else { "lower bound" };
                let text = format!(
                    "circumference: {} ({kind})\ncycle: {}\n{} nodes",
                    c.lower_bound,
                    cycle(&c.witness.vertices),
                    c.nodes_explored
                );
                let body = json!({
                    "outcome": if c.exact { "exact" } else { "lower_bound" },
                    "lower_bound": c.lower_bound,
                    "exact": c.exact,
                    "witness": c.witness,
                    "witness_valid": valid,
                    "nodes_explored": c.nodes_explored,
                });
                out.emit(i, input.fingerprint.as_deref(), "circumference", params, body, &text);
                codes.push(if valid { Exit::Ok } else { Exit::Refuted });
            }
            Err(e) => {
                let body = json!({ "outcome": "error", "error": e.to_string() });
                out.emit(i, input.fingerprint.as_deref(), "circumference", params, body, &format!("error: {e}"));
                codes.push(Exit::Usage);
            }
        }
    }
    Ok(Exit::all(codes))
}
