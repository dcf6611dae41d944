use std::collections::BTreeMap;
use std::path::Path;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use super::{load_bytes, FormatError, Loaded};
use crate::constructions::{
    catalog, make_dn, make_fan_ring, make_gnk, make_hk, prism, random_c3cp, triangle_expand, CATALOG_NAMES,
};
use crate::embedding::Embedding;
use crate::graph::Graph;
use crate::spectrum::{circumference, exists_cycle_in_range, girth, CircumferenceResult, IntervalOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Source {
    File { path: String, index: usize },
    Generator { name: String, params: Vec<(String, usize)>, seed: Option<u64> },
}

impl std::fmt::Display for Source {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Source::File { path, index } => write!(f, "{path}#{index}"),
            Source::Generator { name, params, seed } => {
                write!(f, "{name}")?;
                for (k, v) in params {
                    write!(f, " {k}={v}")?;
                }
                if let Some(s) = seed {
                    write!(f, " seed={s}")?;
                }
                Ok(())
            }
        }
    }
}

/// A corpus graph with lazily computed facts. The facts are only a cache:
/// each one is recomputed from the graph on a miss.
#[derive(Debug)]
pub struct CorpusEntry {
    pub source: Source,
    pub embedding: Option<Embedding>,
    pub graph: Graph,
    girth: OnceLock<Option<usize>>,
    circumference: Mutex<Option<CircumferenceResult>>,
    windows: Mutex<BTreeMap<(usize, usize), IntervalOutcome>>,
}

impl CorpusEntry {
    pub fn embedded(source: Source, embedding: Embedding) -> Self {
        let graph = embedding.graph();
        Self::build(source, Some(embedding), graph)
    }

    pub fn abstract_graph(source: Source, graph: Graph) -> Self {
        Self::build(source, None, graph)
    }

    fn build(source: Source, embedding: Option<Embedding>, graph: Graph) -> Self {
        CorpusEntry {
            source,
            embedding,
            graph,
            girth: OnceLock::new(),
            circumference: Mutex::new(None),
            windows: Mutex::new(BTreeMap::new()),
        }
    }

    /// `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        *self.girth.get_or_init(|| girth(&self.graph).ok().map(|w| w.len()))
    }

    /// Circumference search; an exact cached answer is reused, anything
    /// else is recomputed with the given budget.
    pub fn circumference(&self, budget: u64) -> Option<CircumferenceResult> {
        let mut slot = self.circumference.lock().expect("cache lock");
        if let Some(c) = slot.as_ref().filter(|c| c.exact) {
            return Some(c.clone());
        }
        let c = circumference(&self.graph, budget).ok()?;
        *slot = Some(c.clone());
        Some(c)
    }

    /// Interval search; definite answers are cached.
    pub fn window(&self, lo: usize, hi: usize, budget: u64) -> IntervalOutcome {
        if let Some(o) = self.windows.lock().expect("cache lock").get(&(lo, hi)) {
            return o.clone();
        }
        let outcome = match exists_cycle_in_range(&self.graph, lo, hi, budget) {
            Ok(r) => r.outcome,
            Err(_) => IntervalOutcome::Unknown,
        };
        if outcome != IntervalOutcome::Unknown {
            self.windows.lock().expect("cache lock").insert((lo, hi), outcome.clone());
        }
        outcome
    }
}

/// Loads every file in `dir` (sorted by name, hidden files skipped) in any
/// supported format.
pub fn load_dir(dir: &Path) -> Result<Vec<CorpusEntry>, FormatError> {
    let io = |e: std::io::Error| FormatError::Io(format!("{}: {e}", dir.display()));
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && !p.file_name().is_some_and(|n| n.to_string_lossy().starts_with('.')))
        .collect();
    paths.sort();
    let mut out = Vec::new();
    for p in paths {
        let bytes = std::fs::read(&p).map_err(|e| FormatError::Io(format!("{}: {e}", p.display())))?;
        let path = p.display().to_string();
        let source = |index| Source::File { path: path.clone(), index };
        match load_bytes(&bytes)? {
            Loaded::Embedded(es) => {
                out.extend(es.into_iter().enumerate().map(|(i, e)| CorpusEntry::embedded(source(i), e)));
            }
            Loaded::Abstract(gs) => {
                out.extend(gs.into_iter().enumerate().map(|(i, g)| CorpusEntry::abstract_graph(source(i), g)));
            }
        }
    }
    Ok(out)
}

fn generated(name: &str, params: &[(&str, usize)], seed: Option<u64>, e: Embedding) -> CorpusEntry {
    let params = params.iter().map(|&(k, v)| (k.to_string(), v)).collect();
    CorpusEntry::embedded(Source::Generator { name: name.to_string(), params, seed }, e)
}

/// The built-in fixtures: the named catalog, every family at small
/// parameters, and seeded random 3-connected cubic plane graphs.
pub fn standard_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for name in CATALOG_NAMES {
        out.push(generated(name, &[], None, catalog(name).expect("catalog name")));
    }
    for n in 3..=8 {
        out.push(generated("dn", &[("n", n)], None, make_dn(n).embedding));
    }
    for k in 1..=4 {
        out.push(generated("hk", &[("k", k)], None, make_hk(k).gadget));
    }
    for k in 2..=5 {
        out.push(generated("fanring", &[("k", k)], None, make_fan_ring(k)));
    }
    for n in 6..=8 {
        out.push(generated("prism", &[("n", n)], None, prism(n)));
    }
    let dodecahedron = catalog("dodecahedron").expect("catalog name");
    out.push(generated("triexpand", &[], None, triangle_expand(&dodecahedron).expect("cubic input")));
    out.push(generated("gnk", &[("n", 10), ("k", 2)], None, make_gnk(10, 2).expect("valid parameters")));
    for seed in 0..12u64 {
        let n = 8 + 2 * (seed as usize % 10);
        out.push(generated("random", &[("n", n)], Some(seed), random_c3cp(n, seed).expect("even n >= 4")));
    }
    out
}
