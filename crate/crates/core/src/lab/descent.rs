use std::collections::BTreeSet;

use serde::Serialize;

use super::{LabError, Result};
use crate::embedding::{EdgeId, Embedding, FaceId, FaceMap};
use crate::spectrum::CycleWitness;

/// Faces on each side of a cycle. The exterior is the side holding the
/// outer face.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sides {
    pub interior: Vec<FaceId>,
    pub exterior: Vec<FaceId>,
}

/// Splits the faces by the edge set `cycle`: two faces are on the same
/// side when the dual path between them avoids `cycle`.
pub fn interior_faces(e: &Embedding, faces: &FaceMap, cycle: &[EdgeId]) -> Sides {
    let mut parent: Vec<FaceId> = faces.ids().collect();
    fn find(p: &mut [FaceId], mut x: FaceId) -> FaceId {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let cut: BTreeSet<EdgeId> = cycle.iter().copied().collect();
    for (edge, (a, b)) in faces.edge_faces(e).into_iter().enumerate() {
        if !cut.contains(&edge) {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    let outer = find(&mut parent, e.outer_face(faces));
    let (exterior, interior) = faces.ids().partition(|&f| find(&mut parent, f) == outer);
    Sides { interior, exterior }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DescentOutcome {
    MidCycle { witness: CycleWitness },
    LongFace { face: FaceId, length: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Descent {
    pub outcome: DescentOutcome,
    /// Interior face count of each cycle visited, in order.
    pub interior_counts: Vec<usize>,
    /// The edge `f` chosen at each step.
    pub chosen_edges: Vec<EdgeId>,
}

/// Walks from a long cycle towards a long face. At each step either a
/// face inside the current cycle `C` has length in `[k, 2k+c]`, or is long
/// itself, or `C` is replaced by the symmetric difference `D_f` of `C` and
/// the inner face at the smallest edge `f` for which `D_f` is one cycle of
/// length at least `k`. A start already inside the window is returned as
/// it is.
pub fn long_face_or_midcycle(g: &Embedding, k: usize, c: usize, start: &CycleWitness) -> Result<Descent> {
    let hi = 2 * k + c;
    let graph = g.graph();
    if !start.validate(&graph) || start.len() < k {
        return Err(LabError::BadStart(k));
    }
    let faces = g.faces();
    let edge_faces = faces.edge_faces(g);
    let face_edges: Vec<BTreeSet<EdgeId>> =
        faces.ids().map(|f| faces.boundary_edges(g, f).into_iter().collect()).collect();
    let mut current: BTreeSet<EdgeId> = start.edges.iter().copied().collect();
    let mut interior_counts: Vec<usize> = Vec::new();
    let mut chosen_edges = Vec::new();
    let finish = |outcome, interior_counts, chosen_edges| Ok(Descent { outcome, interior_counts, chosen_edges });
    if start.len() <= hi {
        return finish(DescentOutcome::MidCycle { witness: start.clone() }, interior_counts, chosen_edges);
    }

    loop {
        let cycle: Vec<EdgeId> = current.iter().copied().collect();
        let sides = interior_faces(g, &faces, &cycle);
        if let Some(&before) = interior_counts.last() {
            if sides.interior.len() >= before {
                return Err(LabError::NoProgress { before, after: sides.interior.len() });
            }
        }
        interior_counts.push(sides.interior.len());
        for side in [&sides.interior, &sides.exterior] {
            if let [f] = side[..] {
                let outcome = DescentOutcome::LongFace { face: f, length: faces.face_len(f) };
                return finish(outcome, interior_counts, chosen_edges);
            }
        }
        let mut inside = vec![false; faces.len()];
        for &f in &sides.interior {
            inside[f] = true;
        }
        let inner_face = |e: EdgeId| {
            let (a, b) = edge_faces[e];
            if inside[a] {
                a
            } else {
                b
            }
        };

        for &e in &cycle {
            let f = inner_face(e);
            let len = faces.face_len(f);
            if len > hi {
                let outcome = DescentOutcome::LongFace { face: f, length: len };
                return finish(outcome, interior_counts, chosen_edges);
            }
            if len >= k {
                if let Some(witness) = CycleWitness::from_face(g, &faces, f) {
                    return finish(DescentOutcome::MidCycle { witness }, interior_counts, chosen_edges);
                }
            }
        }

        let next = cycle.iter().find_map(|&e| {
            let d: Vec<EdgeId> = current.symmetric_difference(&face_edges[inner_face(e)]).copied().collect();
            CycleWitness::from_edge_set(&graph, &d).filter(|w| w.len() >= k).map(|w| (e, w))
        });
        let Some((f, d)) = next else {
            return Err(LabError::NoSingleCycleEdge { cycle, interior: sides.interior });
        };
        chosen_edges.push(f);
        if d.len() <= hi {
            return finish(DescentOutcome::MidCycle { witness: d }, interior_counts, chosen_edges);
        }
        current = d.edges.iter().copied().collect();
    }
}
