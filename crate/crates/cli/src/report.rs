use std::fmt;
use std::process::ExitCode;

use cycle_spectra::constructions::ConstructionError;
use cycle_spectra::io::FormatError;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok,
    Refuted,
    Unknown,
    Usage,
}

impl Exit {
    /// Merges per-graph results: usage errors dominate, then refutations,
    /// then unknowns.
    pub fn combine(self, other: Exit) -> Exit {
        let rank = |e: Exit| match e {
            Exit::Ok => 0,
            Exit::Unknown => 1,
            Exit::Refuted => 2,
            Exit::Usage => 3,
        };
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }

    pub fn all(codes: impl IntoIterator<Item = Exit>) -> Exit {
        codes.into_iter().fold(Exit::Ok, Exit::combine)
    }
}

impl From<Exit> for ExitCode {
    fn from(e: Exit) -> ExitCode {
        ExitCode::from(match e {
            Exit::Ok => 0,
            Exit::Refuted => 1,
            Exit::Unknown => 2,
            Exit::Usage => 3,
        })
    }
}

/// Errors that stop a command before any per-graph result.
#[derive(Debug)]
pub enum Failure {
    Format(FormatError),
    Construction(ConstructionError),
    Usage(String),
    Io(String),
}

impl Failure {
    pub fn exit(&self) -> Exit {
        Exit::Usage
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Format(e) => write!(f, "{e}"),
            Failure::Construction(e) => write!(f, "{e}"),
            Failure::Usage(m) | Failure::Io(m) => write!(f, "{m}"),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Format(e)
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        Failure::Construction(e)
    }
}

/// Prints one result per graph, as a JSON line or as text. Text lines get
/// an index prefix when the input held several graphs.
pub struct Printer {
    pub json: bool,
    pub many: bool,
}

impl Printer {
    pub fn new(json: bool, count: usize) -> Self {
        Printer { json, many: count > 1 }
    }

    pub fn emit(
        &self,
        index: usize,
        fingerprint: Option<&str>,
        command: &str,
        params: Value,
        body: impl Serialize,
        text: &str,
    ) {
        if self.json {
            let mut obj = json!({
                "index": index,
                "fingerprint": fingerprint,
                "command": command,
                "parameters": params,
            });
            let body = serde_json::to_value(body).expect("report serializes");
            if let (Value::Object(o), Value::Object(b)) = (&mut obj, body) {
                o.extend(b);
            }
            println!("{obj}");
        } else if self.many {
            for line in text.lines() {
                println!("[{index}] {line}");
            }
        } else {
            println!("{text}");
        }
    }
}

pub fn lengths(ls: &[usize]) -> String {
    ls.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

pub fn cycle(vs: &[usize]) -> String {
    lengths(vs)
}
