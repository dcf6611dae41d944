use std::collections::BTreeSet;

use serde::Serialize;

use super::{LabError, Result};
use crate::connectivity::{connectivity_level, two_edge_cuts, ConnectivityLevel};
use crate::embedding::{component_containing, EdgeId, Embedding, FaceId, VertexId};
use crate::spectrum::CycleWitness;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlueStep {
    /// The glued faces, as ids in the graph before this step.
    pub faces: (FaceId, FaceId),
    pub lengths: (usize, usize),
    /// Deleted edges, as ids of the input graph.
    pub deleted: Vec<EdgeId>,
    /// Components left by the deletion; only the marker's is kept.
    pub components: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AbcStatus {
    /// No two faces shorter than `k` share an edge.
    pub a: bool,
    /// Every marker edge survives.
    pub b: bool,
    /// No bridges, and every edge of a 2-edge-cut lies on a face longer
    /// than `2k` and a face shorter than `k`.
    pub c: bool,
    pub two_connected: bool,
}

impl AbcStatus {
    pub fn all(&self) -> bool {
        self.a && self.b && self.c && self.two_connected
    }
}

#[derive(Debug, Clone)]
pub struct ReductionResult {
    pub k: usize,
    pub reduced: Embedding,
    /// Input vertex and edge of each vertex and edge of `reduced`.
    pub vertex_origin: Vec<VertexId>,
    pub edge_origin: Vec<EdgeId>,
    /// The marker face of the input, in input ids.
    pub marker: CycleWitness,
    /// The marker's face in `reduced`, if it is still a face there.
    pub marker_face: Option<FaceId>,
    pub glue_log: Vec<GlueStep>,
    pub properties: AbcStatus,
}

impl ReductionResult {
    /// Edge ids of `reduced` mapped to the input.
    pub fn lift_edges(&self, edges: &[EdgeId]) -> Vec<EdgeId> {
        edges.iter().map(|&e| self.edge_origin[e]).collect()
    }
}

/// Repeatedly glues the two adjacent faces shorter than `k` with the
/// smallest face ids, deleting the edges they share and keeping the
/// component that carries the marker face.
pub fn reduce_glue(g: &Embedding, k: usize, marker: FaceId) -> Result<ReductionResult> {
    let faces = g.faces();
    if marker >= faces.len() {
        return Err(LabError::UnknownFace(marker));
    }
    let length = faces.face_len(marker);
    if length < 2 * k + 1 {
        return Err(LabError::MarkerTooShort { length, needed: 2 * k + 1 });
    }
    let marker_cycle = CycleWitness::from_face(g, &faces, marker)
        .unwrap_or_else(|| CycleWitness::new(faces.boundary_vertices(g, marker), faces.boundary_edges(g, marker)));
    let marker_set: BTreeSet<EdgeId> = marker_cycle.edges.iter().copied().collect();

    let mut current = g.clone();
    let mut vertex_origin: Vec<VertexId> = (0..g.vertex_count()).collect();
    let mut edge_origin: Vec<EdgeId> = (0..g.edge_count()).collect();
    let mut glue_log = Vec::new();
    loop {
        let faces = current.faces();
        let edge_faces = faces.edge_faces(&current);
        let short = |f: FaceId| faces.face_len(f) < k;
        let pair = edge_faces
            .iter()
            .filter(|&&(a, b)| a != b && short(a) && short(b))
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .min();
        let Some((f1, f2)) = pair else { break };
        let shared: Vec<EdgeId> = (0..current.edge_count())
            .filter(|&e| {
                let (a, b) = edge_faces[e];
                (a.min(b), a.max(b)) == (f1, f2)
            })
            .collect();
        if shared.iter().any(|&e| marker_set.contains(&edge_origin[e])) {
            return Err(LabError::MarkerDestroyed);
        }
        let components = current.delete_edges(&shared)?;
        let marker_now: Vec<EdgeId> =
            (0..current.edge_count()).filter(|&e| marker_set.contains(&edge_origin[e])).collect();
        let keep = component_containing(&components, &marker_now)?;
        glue_log.push(GlueStep {
            faces: (f1, f2),
            lengths: (faces.face_len(f1), faces.face_len(f2)),
            deleted: shared.iter().map(|&e| edge_origin[e]).collect(),
            components: components.len(),
        });
        let comp = components.into_iter().nth(keep).expect("index from component_containing");
        vertex_origin = comp.vertex_origin.iter().map(|&v| vertex_origin[v]).collect();
        edge_origin = comp.edge_origin.iter().map(|&e| edge_origin[e]).collect();
        current = comp.embedding;
    }

    let faces = current.faces();
    let marker_face = faces.ids().find(|&f| {
        let es: BTreeSet<EdgeId> = faces.boundary_edges(&current, f).iter().map(|&e| edge_origin[e]).collect();
        es == marker_set && faces.face_len(f) == marker_set.len()
    });
    let mut result = ReductionResult {
        k,
        reduced: current,
        vertex_origin,
        edge_origin,
        marker: marker_cycle,
        marker_face,
        glue_log,
        properties: AbcStatus { a: false, b: false, c: false, two_connected: false },
    };
    result.properties = check_abc(&result, k);
    Ok(result)
}

/// Evaluates (A), (B), (C) and 2-connectivity from scratch on the reduced
/// graph, ignoring the glue log.
pub fn check_abc(r: &ReductionResult, k: usize) -> AbcStatus {
    let g = &r.reduced;
    let faces = g.faces();
    let edge_faces = faces.edge_faces(g);
    let len = |f: FaceId| faces.face_len(f);
    let a = !edge_faces.iter().any(|&(p, q)| p != q && len(p) < k && len(q) < k);
    let kept: BTreeSet<EdgeId> = r.edge_origin.iter().copied().collect();
    let b = r.marker.edges.iter().all(|e| kept.contains(e));
    let graph = g.graph();
    let cuts = two_edge_cuts(&graph);
    let c = cuts.bridges.is_empty()
        && cuts.edges().into_iter().all(|e| {
            let (p, q) = edge_faces[e];
            let (lo, hi) = (len(p).min(len(q)), len(p).max(len(q)));
            lo < k && hi > 2 * k
        });
    let two_connected = connectivity_level(&graph) >= ConnectivityLevel::Two;
    AbcStatus { a, b, c, two_connected }
}
