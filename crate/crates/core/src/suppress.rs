//! Degree-2 suppression: every maximal path through degree-2 vertices
//! becomes a single edge. The result may have loops and parallel edges.

use crate::embedding::{EdgeId, Embedding, EmbeddingError, FaceId, Result, VertexId};

#[derive(Debug, Clone)]
pub struct SuppressionMap {
    pub image: Embedding,
    /// Source edges replaced by each image edge, in order from the image
    /// edge's smaller dart.
    pub edge_origin: Vec<Vec<EdgeId>>,
    /// Image face of each source face.
    pub face_bijection: Vec<FaceId>,
    /// Source vertex of each image vertex.
    pub vertex_origin: Vec<VertexId>,
}

impl SuppressionMap {
    /// Source edges of a set of image edges.
    pub fn lift_edges(&self, edges: &[EdgeId]) -> Vec<EdgeId> {
        edges.iter().flat_map(|&e| self.edge_origin[e].iter().copied()).collect()
    }
}

pub fn suppress_degree2(e: &Embedding) -> Result<SuppressionMap> {
    let n = e.vertex_count();
    for v in 0..n {
        let d = e.degree(v);
        if d != 2 && d != 3 {
            return Err(EmbeddingError::BadDegree { vertex: v, degree: d });
        }
    }
    let vertex_origin: Vec<VertexId> = (0..n).filter(|&v| e.degree(v) == 3).collect();
    if vertex_origin.is_empty() {
        return Err(EmbeddingError::DegenerateCycle);
    }
    let mut new_vertex = vec![usize::MAX; n];
    for (i, &v) in vertex_origin.iter().enumerate() {
        new_vertex[v] = i;
    }
    // image darts are exactly the source darts at kept vertices, in order
    let mut new_dart = vec![usize::MAX; e.dart_count()];
    let mut kept_darts = Vec::new();
    for &v in &vertex_origin {
        for d in e.darts_at(v) {
            new_dart[d] = kept_darts.len();
            kept_darts.push(d);
        }
    }

    // follow each kept dart through degree-2 vertices
    let mut dart_image = vec![usize::MAX; e.dart_count()];
    let mut twin = vec![usize::MAX; kept_darts.len()];
    let mut rotations = vec![Vec::with_capacity(3); vertex_origin.len()];
    let mut paths = vec![Vec::new(); kept_darts.len()];
    for (nd, &d) in kept_darts.iter().enumerate() {
        let mut cur = d;
        loop {
            dart_image[cur] = nd;
            paths[nd].push(e.edge_of(cur));
            let w = e.head(cur);
            if new_vertex[w] != usize::MAX {
                break;
            }
            let back = e.twin(cur);
            cur = e.darts_at(w).find(|&x| x != back).expect("degree 2");
        }
        let end = e.twin(cur);
        twin[nd] = new_dart[end];
        rotations[new_vertex[e.origin(d)]].push(new_vertex[e.origin(end)]);
    }
    let outer = dart_image[e.outer_dart()];
    let image = Embedding::from_parts(&rotations, twin, outer)?;

    let edge_origin = (0..image.edge_count()).map(|h| paths[image.edge_dart(h)].clone()).collect();
    let src_faces = e.faces();
    let img_faces = image.faces();
    let face_bijection = src_faces.ids().map(|f| img_faces.face_of(dart_image[src_faces.boundary(f)[0]])).collect();
    Ok(SuppressionMap { image, edge_origin, face_bijection, vertex_origin })
}
