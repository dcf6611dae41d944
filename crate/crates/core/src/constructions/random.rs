use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::families::catalog;
use super::{ConstructionError, Result};
use crate::connectivity::{connectivity_level, ConnectivityLevel};
use crate::embedding::{DartId, Embedding};

const MAX_ATTEMPTS: usize = 1000;

/// Grows a 3-connected cubic plane graph on `n` vertices from `K_4`.
///
/// Each move picks a face and two distinct edges on it, subdivides both and
/// joins the new vertices across the face. Moves that would drop below
/// 3-connectivity are redrawn.
pub fn random_c3cp(n: usize, seed: u64) -> Result<Embedding> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(ConstructionError::BadParameters(format!("random cubic graph needs an even n >= 4, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = catalog("k4")?;
    while g.vertex_count() < n {
        let mut attempts = 0;
        g = loop {
            attempts += 1;
            if attempts > MAX_ATTEMPTS {
                return Err(ConstructionError::Stalled(g.vertex_count()));
            }
            let faces = g.faces();
            let f = rng.gen_range(0..faces.len());
            let boundary = faces.boundary(f);
            let i = rng.gen_range(0..boundary.len());
            let mut j = rng.gen_range(0..boundary.len() - 1);
            if j >= i {
                j += 1;
            }
            let (a, b) = (boundary[i], boundary[j]);
            if g.edge_of(a) == g.edge_of(b) {
                continue;
            }
            let candidate = insert_chord(&g, a, b)?;
            if connectivity_level(&candidate.graph()) == ConnectivityLevel::AtLeastThree {
                break candidate;
            }
        };
    }
    Ok(g)
}

/// Subdivides the edges of darts `a` and `b` (both on one face) and joins
/// the two new vertices through that face.
fn insert_chord(g: &Embedding, a: DartId, b: DartId) -> Result<Embedding> {
    let n = g.vertex_count();
    let (s, t) = (n, n + 1);
    let mut rot = g.rotations();
    // the face lies to the right of each boundary dart, so the chord sits
    // after the dart's origin in the new vertex's ccw order
    let mut split = |d: DartId, mid: usize, other: usize| {
        let (x, y) = (g.origin(d), g.head(d));
        let px = d - g.darts_at(x).start;
        let back = g.twin(d);
        let py = back - g.darts_at(y).start;
        rot[x][px] = mid;
        rot[y][py] = mid;
        vec![y, x, other]
    };
    let rs = split(a, s, t);
    let rt = split(b, t, s);
    rot.push(rs);
    rot.push(rt);
    let out = Embedding::from_rotations(&rot)?;
    Ok(out)
}
