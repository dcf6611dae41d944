//! Rotation systems read off straight-line drawings.

use crate::embedding::{Embedding, EmbeddingError, VertexId};

/// Neighbors of each vertex sorted counterclockwise by angle.
pub(crate) fn rotations_from_points(points: &[(f64, f64)], edges: &[(VertexId, VertexId)]) -> Vec<Vec<VertexId>> {
    let mut rot: Vec<Vec<VertexId>> = vec![Vec::new(); points.len()];
    for &(a, b) in edges {
        rot[a].push(b);
        rot[b].push(a);
    }
    for (v, list) in rot.iter_mut().enumerate() {
        let (px, py) = points[v];
        list.sort_by(|&a, &b| {
            let ta = (points[a].1 - py).atan2(points[a].0 - px);
            let tb = (points[b].1 - py).atan2(points[b].0 - px);
            ta.partial_cmp(&tb).unwrap()
        });
    }
    rot
}

/// Embeds a planar straight-line drawing. The unbounded face becomes the
/// outer face and, when vertex 0 lies on it, dart 0 is placed on it.
pub(crate) fn embed_drawing(
    points: &[(f64, f64)],
    edges: &[(VertexId, VertexId)],
) -> Result<Embedding, EmbeddingError> {
    let mut rot = rotations_from_points(points, edges);
    let emb = Embedding::from_rotations(&rot)?;
    let faces = emb.faces();
    let area = |f: usize| -> f64 {
        faces
            .boundary(f)
            .iter()
            .map(|&d| {
                let (x0, y0) = points[emb.origin(d)];
                let (x1, y1) = points[emb.head(d)];
                x0 * y1 - x1 * y0
            })
            .sum()
    };
    let outer = faces.ids().max_by(|&a, &b| area(a).partial_cmp(&area(b)).unwrap()).expect("embedding has faces");
    if let Some(d) = emb.darts_at(0).find(|&d| faces.face_of(d) == outer) {
        rot[0].rotate_left(d);
        Embedding::from_rotations(&rot)
    } else {
        let d = faces.boundary(outer)[0];
        emb.with_outer_dart(d)
    }
}

/// Points on a circle; the first at `start` radians, continuing
/// counterclockwise (or clockwise for a negative `step`).
pub(crate) fn arc(center: (f64, f64), radius: f64, start: f64, step: f64, count: usize) -> Vec<(f64, f64)> {
    (0..count)
        .map(|i| {
            let t = start + step * i as f64;
            (center.0 + radius * t.cos(), center.1 + radius * t.sin())
        })
        .collect()
}
