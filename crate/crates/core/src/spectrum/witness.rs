use serde::{Deserialize, Serialize};

use crate::embedding::{EdgeId, Embedding, FaceId, FaceMap, VertexId};
use crate::graph::Graph;

/// A concrete simple cycle: `edges[i]` joins `vertices[i]` and
/// `vertices[i + 1]` (cyclically).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    pub length: usize,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl CycleWitness {
    pub fn new(vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Self {
        debug_assert_eq!(vertices.len(), edges.len());
        CycleWitness { length: edges.len(), vertices, edges }
    }

    pub fn len(&self) -> usize {
        self.length
    }

    pub fn is_empty(&self) -> bool {
        self.length == 0
    }

    /// Checks the witness against `g`: consecutive vertices joined by the
    /// listed edges, no repeated vertex or edge.
    pub fn validate(&self, g: &Graph) -> bool {
        let n = self.vertices.len();
        if n == 0 || n != self.edges.len() || n != self.length {
            return false;
        }
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        let mut es = self.edges.clone();
        es.sort_unstable();
        es.dedup();
        if vs.len() != n || es.len() != n {
            return false;
        }
        (0..n).all(|i| {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
            let e = self.edges[i];
            if a >= g.vertex_count() || e >= g.edge_count() {
                return false;
            }
            let (x, y) = g.endpoints(e);
            (x, y) == (a, b) || (y, x) == (a, b)
        })
    }

    /// Cycle spanned by an edge set, if it is one.
    pub fn from_edge_set(g: &Graph, edges: &[EdgeId]) -> Option<Self> {
        if edges.is_empty() {
            return None;
        }
        let mut incident: std::collections::BTreeMap<VertexId, Vec<EdgeId>> = Default::default();
        for &e in edges {
            let (a, b) = g.endpoints(e);
            incident.entry(a).or_default().push(e);
            incident.entry(b).or_default().push(e);
        }
        if incident.values().any(|es| es.len() != 2) {
            return None;
        }
        let start = *incident.keys().next().unwrap();
        let mut vertices = vec![start];
        let mut walk = vec![];
        let mut v = start;
        let mut prev_edge = usize::MAX;
        loop {
            let es = &incident[&v];
            // a loop lists its edge twice at its vertex
            let e = if es[0] != prev_edge { es[0] } else { es[1] };
            walk.push(e);
            let (a, b) = g.endpoints(e);
            let w = if a == v { b } else { a };
            prev_edge = e;
            if w == start {
                break;
            }
            vertices.push(w);
            v = w;
            if walk.len() > edges.len() {
                return None;
            }
        }
        if walk.len() != edges.len() {
            return None;
        }
        Some(Self::new(vertices, walk))
    }

    /// Boundary of face `f` when it is a simple cycle.
    pub fn from_face(emb: &Embedding, faces: &FaceMap, f: FaceId) -> Option<Self> {
        if !faces.is_simple_cycle(emb, f) {
            return None;
        }
        Some(Self::new(faces.boundary_vertices(emb, f), faces.boundary_edges(emb, f)))
    }
}
