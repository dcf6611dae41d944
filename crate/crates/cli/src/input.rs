use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use cycle_spectra::io::{embedding_to_json, load_bytes, write_planar_code, FormatError, Loaded};
use cycle_spectra::{fingerprint, Embedding, Graph};

use crate::report::Failure;
use crate::Format;

/// One input graph; `embedding` is absent for graph6.
pub struct Input {
    pub graph: Graph,
    pub embedding: Option<Embedding>,
    pub fingerprint: Option<String>,
}

fn read_source(path: &Option<PathBuf>) -> Result<Vec<u8>, Failure> {
    let mut bytes = Vec::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            bytes = std::fs::read(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin().read_to_end(&mut bytes).map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        }
    }
    Ok(bytes)
}

pub fn load(path: &Option<PathBuf>) -> Result<Vec<Input>, Failure> {
    let inputs: Vec<Input> = match load_bytes(&read_source(path)?)? {
        Loaded::Embedded(es) => es
            .into_iter()
            .map(|e| Input { graph: e.graph(), fingerprint: Some(fingerprint(&e)), embedding: Some(e) })
            .collect(),
        Loaded::Abstract(gs) => {
            gs.into_iter().map(|graph| Input { graph, embedding: None, fingerprint: None }).collect()
        }
    };
    if inputs.is_empty() {
        return Err(Failure::Usage("input holds no graph".into()));
    }
    Ok(inputs)
}

/// As [`load`], rejecting inputs without an embedding.
pub fn load_embedded(path: &Option<PathBuf>) -> Result<Vec<Input>, Failure> {
    let inputs = load(path)?;
    if inputs.iter().any(|i| i.embedding.is_none()) {
        return Err(FormatError::NotEmbedded.into());
    }
    Ok(inputs)
}

pub fn encode(graphs: &[&Embedding], to: Format) -> Result<Vec<u8>, Failure> {
    Ok(match to {
        Format::Pc => write_planar_code(&graphs.iter().map(|&e| e.clone()).collect::<Vec<_>>())?,
        Format::Json => {
            let items: Vec<String> = graphs.iter().map(|g| embedding_to_json(g)).collect();
            let text = match items.as_slice() {
                [one] => format!("{one}\n"),
                _ => format!("[\n{}\n]\n", items.join(",\n")),
            };
            text.into_bytes()
        }
    })
}

/// The format implied by an output path: `.pc` means planar_code.
pub fn format_for(path: Option<&Path>) -> Format {
    match path.and_then(Path::extension) {
        Some(ext) if ext == "pc" => Format::Pc,
        _ => Format::Json,
    }
}

pub fn write_bytes(bytes: &[u8], output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(p) => std::fs::write(p, bytes).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => std::io::stdout().write_all(bytes).map_err(|e| Failure::Io(format!("stdout: {e}"))),
    }
}

pub fn write_graphs(inputs: &[Input], to: Format, output: Option<&Path>) -> Result<(), Failure> {
    let graphs: Vec<&Embedding> = inputs.iter().filter_map(|i| i.embedding.as_ref()).collect();
    write_bytes(&encode(&graphs, to)?, output)
}
