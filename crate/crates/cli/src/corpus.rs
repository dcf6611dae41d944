use std::path::PathBuf;

use clap::{Args, ValueEnum};
use cycle_spectra::io::{load_dir, standard_corpus, CorpusEntry};
use cycle_spectra::spectrum::IntervalOutcome;
use cycle_spectra::{connectivity_level, ConnectivityLevel, Graph};
use rayon::prelude::*;
use serde::Serialize;

use crate::report::{Exit, Failure};
use crate::DEFAULT_BUDGET;

#[derive(Clone, Copy, ValueEnum)]
pub enum Check {
    /// F = n/2 + 2 and some face of length at most 5.
    Euler,
    /// Some cycle length in [4, 10].
    Face5,
    /// A cycle length in [k, 2k+9] for every k from 3 to the circumference.
    Theorem,
}

#[derive(Args)]
pub struct CorpusArgs {
    /// Directory of graph files; every file is read.
    dir: Option<PathBuf>,
    /// Add the built-in generated corpus.
    #[arg(long)]
    builtin: bool,
    #[arg(long)]
    check: Check,
    /// Largest k for `theorem`.
    #[arg(long, default_value_t = 12)]
    kmax: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
enum Status {
    Pass,
    Fail,
    Unknown,
    Skipped,
}

#[derive(Serialize)]
struct EntryResult {
    source: String,
    status: Status,
    detail: String,
}

fn simple_cubic(g: &Graph) -> bool {
    !g.has_loops() && !g.has_parallel_edges() && (0..g.vertex_count()).all(|v| g.degree(v) == 3)
}

fn check_entry(e: &CorpusEntry, check: Check, kmax: usize, budget: u64) -> (Status, String) {
    let g = &e.graph;
    if !simple_cubic(g) {
        return (Status::Skipped, "not a simple cubic graph".into());
    }
    let level = connectivity_level(g);
    match check {
        Check::Euler => {
            let Some(emb) = &e.embedding else {
                return (Status::Skipped, "no embedding".into());
            };
            if level < ConnectivityLevel::Two {
                return (Status::Skipped, "not 2-connected".into());
            }
            let faces = emb.faces();
            let n = g.vertex_count();
            let min = faces.lengths().into_iter().min().unwrap_or(0);
            let detail = format!("F {} n/2+2 {} min face {min}", faces.len(), n / 2 + 2);
            let ok = faces.len() == n / 2 + 2 && min <= 5;
            (if ok { Status::Pass } else { Status::Fail }, detail)
        }
        Check::Face5 => {
            if level < ConnectivityLevel::Two {
                return (Status::Skipped, "not 2-connected".into());
            }
            match e.window(4, 10, budget) {
                IntervalOutcome::Found(w) => (Status::Pass, format!("cycle of length {}", w.len())),
                IntervalOutcome::Empty => (Status::Fail, "no cycle length in [4, 10]".into()),
                IntervalOutcome::Unknown => (Status::Unknown, "budget exhausted".into()),
            }
        }
        Check::Theorem => {
            if level < ConnectivityLevel::AtLeastThree {
                return (Status::Skipped, "not 3-connected".into());
            }
            let Some(c) = e.circumference(budget) else {
                return (Status::Skipped, "acyclic".into());
            };
            if !c.exact {
                return (Status::Unknown, format!("circumference at least {}, not exact", c.lower_bound));
            }
            let top = kmax.min(c.lower_bound);
            for k in 3..=top {
                match e.window(k, 2 * k + 9, budget) {
                    IntervalOutcome::Found(_) => {}
                    IntervalOutcome::Empty => {
                        return (Status::Fail, format!("no cycle length in [{k}, {}]", 2 * k + 9))
                    }
                    IntervalOutcome::Unknown => return (Status::Unknown, format!("budget exhausted at k = {k}")),
                }
            }
            (Status::Pass, format!("k = 3..{top}, circumference {}", c.lower_bound))
        }
    }
}

pub fn run(args: CorpusArgs) -> Result<Exit, Failure> {
    let mut entries = Vec::new();
    if let Some(dir) = &args.dir {
        entries.extend(load_dir(dir)?);
    }
    if args.builtin {
        entries.extend(standard_corpus());
    }
    if entries.is_empty() {
        return Err(Failure::Usage("corpus is empty; give a directory or --builtin".into()));
    }
    let results: Vec<EntryResult> = entries
        .par_iter()
        .map(|e| {
            let (status, detail) = check_entry(e, args.check, args.kmax, args.budget);
            EntryResult { source: e.source.to_string(), status, detail }
        })
        .collect();
    let mut codes = Vec::new();
    for r in &results {
        if args.json {
            println!("{}", serde_json::to_string(r).expect("result serializes"));
        } else {
            let tag = match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Unknown => "unknown",
                Status::Skipped => "skip",
            };
            println!("{tag:<7} {}: {}", r.source, r.detail);
        }
        codes.push(match r.status {
            Status::Fail => Exit::Refuted,
            Status::Unknown => Exit::Unknown,
            _ => Exit::Ok,
        });
    }
    let count = |s: Status| results.iter().filter(|r| r.status == s).count();
    if !args.json {
        println!(
            "{} entries: {} pass, {} fail, {} unknown, {} skipped",
            results.len(),
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Unknown),
            count(Status::Skipped)
        );
    }
    Ok(Exit::all(codes))
}
