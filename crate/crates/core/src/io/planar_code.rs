use super::FormatError;
use crate::embedding::Embedding;

pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

/// Reads plantri's planar_code: after the header, each record is a vertex
/// count byte followed by every vertex's 1-based neighbors in rotation
/// order, each list closed by 0. The face of vertex 1's first dart is the
/// outer face.
pub fn parse_planar_code(bytes: &[u8]) -> Result<Vec<Embedding>, FormatError> {
    let body = bytes.strip_prefix(PLANAR_CODE_HEADER).ok_or(FormatError::BadHeader)?;
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < body.len() {
        let index = out.len();
        let n = body[pos] as usize;
        pos += 1;
        if n == 0 {
            // plantri's two-byte variant for more than 255 vertices
            return Err(FormatError::TooLarge(256));
        }
        let mut rotations = Vec::with_capacity(n);
        for _ in 0..n {
            let mut rot = Vec::with_capacity(3);
            loop {
                let &b = body.get(pos).ok_or(FormatError::TruncatedRecord(index))?;
                pos += 1;
                if b == 0 {
                    break;
                }
                rot.push(b as usize - 1);
            }
            rotations.push(rot);
        }
        let e = Embedding::from_rotations(&rotations).map_err(|source| FormatError::Embedding { index, source })?;
        out.push(e);
    }
    Ok(out)
}

/// Writes the header and one record per graph. The outer face is not
/// stored; readers take the face of vertex 1's first dart.
pub fn write_planar_code(graphs: &[Embedding]) -> Result<Vec<u8>, FormatError> {
    let mut out = PLANAR_CODE_HEADER.to_vec();
    for g in graphs {
        let n = g.vertex_count();
        if n > 255 {
            return Err(FormatError::TooLarge(n));
        }
        if g.has_parallel_edges() && !g.twins_recoverable() {
            return Err(FormatError::AmbiguousTwins);
        }
        out.push(n as u8);
        for rot in g.rotations() {
            out.extend(rot.iter().map(|&w| (w + 1) as u8));
            out.push(0);
        }
    }
    Ok(out)
}
