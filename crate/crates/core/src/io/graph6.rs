use super::FormatError;
use crate::embedding::VertexId;
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

/// Decodes one graph per non-empty line; an optional `>>graph6<<` header
/// is skipped.
pub fn decode_graph6(text: &str) -> Result<Vec<Graph>, FormatError> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .map(|(line, l)| {
            decode_line(l.strip_prefix(HEADER).unwrap_or(l))
                .map_err(|reason| FormatError::BadGraph6 { line, reason: reason.to_string() })
        })
        .collect()
}

fn decode_line(line: &str) -> Result<Graph, &'static str> {
    let bytes = line.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err("byte outside 63..=126");
    }
    let six = |s: &[u8]| s.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    let (n, rest) = match bytes {
        [126, 126, tail @ ..] if tail.len() >= 6 => (six(&tail[..6]), &tail[6..]),
        [126, tail @ ..] if tail.len() >= 3 => (six(&tail[..3]), &tail[3..]),
        [126, ..] => return Err("truncated size"),
        [b, tail @ ..] => ((b - 63) as usize, tail),
        [] => return Err("empty"),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err("wrong length for vertex count");
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_edges(n, &edges))
}

/// Encodes a simple graph; loops and parallel edges have no graph6 form.
pub fn encode_graph6(g: &Graph) -> Result<String, FormatError> {
    if g.has_loops() || g.has_parallel_edges() {
        return Err(FormatError::BadGraph6 { line: 0, reason: "graph6 holds simple graphs only".into() });
    }
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    let push6 = |out: &mut Vec<u8>, x: usize, groups: usize| {
        for s in (0..groups).rev() {
            out.push(((x >> (6 * s)) & 63) as u8 + 63);
        }
    };
    match n {
        0..=62 => out.push(n as u8 + 63),
        63..=258_047 => {
            out.push(126);
            push6(&mut out, n, 3);
        }
        _ => {
            out.extend([126, 126]);
            push6(&mut out, n, 6);
        }
    }
    let adjacent = |i: VertexId, j: VertexId| g.edge_between(i, j).is_some();
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
