//! Dart-based plane multigraphs.
//!
//! An [`Embedding`] stores a rotation system: the darts leaving each vertex
//! are laid out contiguously in counterclockwise order, so `next` is implicit.
//! Darts are numbered lexicographically by `(vertex, position)`, which makes
//! every derived structure (faces, edges, components) reproducible from the
//! rotation lists alone.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

pub type VertexId = usize;
pub type DartId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

/// Upper bound on the parallel-edge pairings tried before declaring a
/// rotation system non-planar.
const MAX_PAIRING_ATTEMPTS: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("inconsistent adjacency between vertices {0} and {1}")]
    InconsistentAdjacency(VertexId, VertexId),
    #[error("neighbor {neighbor} of vertex {vertex} is out of range")]
    VertexOutOfRange { vertex: VertexId, neighbor: VertexId },
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph has no edges")]
    Empty,
    #[error("rotation system is not planar: V - E + F = {0}")]
    NotPlanar(i64),
    #[error("twin map is not a fixed-point-free involution at dart {0}")]
    BadTwin(DartId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown dart {0}")]
    UnknownDart(DartId),
    #[error("marker edges are spread over several components")]
    MarkerSplit,
    #[error("suppression input is a single cycle")]
    DegenerateCycle,
    #[error("vertex {vertex} has degree {degree}, expected 2 or 3")]
    BadDegree { vertex: VertexId, degree: usize },
}

pub type Result<T> = std::result::Result<T, EmbeddingError>;

/// A connected plane multigraph given by a rotation system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Embedding {
    offsets: Vec<usize>,
    origin: Vec<VertexId>,
    twin: Vec<DartId>,
    edge_of: Vec<EdgeId>,
    edge_darts: Vec<DartId>,
    outer_dart: DartId,
}

impl Embedding {
    /// Builds an embedding from per-vertex cyclic neighbor lists.
    ///
    /// Repeated neighbors denote parallel edges; a vertex listed in its own
    /// rotation twice denotes a loop. Parallel occurrences are paired in
    /// reverse order (the planar convention); if the result is not planar,
    /// cyclic shifts of each parallel class are tried before giving up.
    pub fn from_rotations(rotations: &[Vec<VertexId>]) -> Result<Self> {
        let offsets = offsets_of(rotations);
        let classes = pair_classes(rotations, &offsets)?;
        let shiftable: Vec<usize> = classes
            .iter()
            .enumerate()
            .filter(|(_, c)| matches!(c, PairClass::Parallel { a, .. } if a.len() > 1))
            .map(|(i, _)| i)
            .collect();

        let mut shifts = vec![0usize; classes.len()];
        let mut first_err = None;
        for _ in 0..MAX_PAIRING_ATTEMPTS {
            let twin = twins_for(&classes, &shifts, offsets[rotations.len()]);
            match Self::from_parts(rotations, twin, 0) {
                Ok(e) => return Ok(e),
                Err(err @ EmbeddingError::NotPlanar(_)) => {
                    first_err.get_or_insert(err);
                }
                Err(err) => return Err(err),
            }
            // odometer over the shifts of parallel classes
            let mut advanced = false;
            for &ci in &shiftable {
                let m = match &classes[ci] {
                    PairClass::Parallel { a, .. } => a.len(),
                    PairClass::Loops { .. } => unreachable!(),
                };
                shifts[ci] += 1;
                if shifts[ci] < m {
                    advanced = true;
                    break;
                }
                shifts[ci] = 0;
            }
            if !advanced {
                break;
            }
        }
        Err(first_err.unwrap_or(EmbeddingError::NotPlanar(0)))
    }

    /// Builds an embedding from rotation lists and an explicit twin map over
    /// the lexicographically numbered darts.
    pub fn from_parts(rotations: &[Vec<VertexId>], twin: Vec<DartId>, outer_dart: DartId) -> Result<Self> {
        let n = rotations.len();
        let offsets = offsets_of(rotations);
        let dart_count = offsets[n];
        if dart_count == 0 {
            return Err(EmbeddingError::Empty);
        }
        if twin.len() != dart_count {
            return Err(EmbeddingError::BadTwin(twin.len().min(dart_count)));
        }
        let mut origin = Vec::with_capacity(dart_count);
        for (v, rot) in rotations.iter().enumerate() {
            for &w in rot {
                if w >= n {
                    return Err(EmbeddingError::VertexOutOfRange { vertex: v, neighbor: w });
                }
                origin.push(v);
            }
        }
        let heads: Vec<VertexId> = rotations.iter().flatten().copied().collect();
        for d in 0..dart_count {
            let t = twin[d];
            if t >= dart_count || t == d || twin[t] != d {
                return Err(EmbeddingError::BadTwin(d));
            }
            if origin[t] != heads[d] {
                return Err(EmbeddingError::InconsistentAdjacency(origin[d], heads[d]));
            }
        }
        if outer_dart >= dart_count {
            return Err(EmbeddingError::UnknownDart(outer_dart));
        }
        let mut edge_of = vec![usize::MAX; dart_count];
        let mut edge_darts = Vec::with_capacity(dart_count / 2);
        for d in 0..dart_count {
            if edge_of[d] == usize::MAX {
                edge_of[d] = edge_darts.len();
                edge_of[twin[d]] = edge_darts.len();
                edge_darts.push(d);
            }
        }
        let emb = Embedding { offsets, origin, twin, edge_of, edge_darts, outer_dart };
        if rotations.iter().any(|r| r.is_empty()) || !emb.is_connected() {
            return Err(EmbeddingError::NotConnected);
        }
        let chi = emb.euler_characteristic();
        if chi != 2 {
            return Err(EmbeddingError::NotPlanar(chi));
        }
        Ok(emb)
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn dart_count(&self) -> usize {
        self.origin.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_darts.len()
    }

    pub fn origin(&self, d: DartId) -> VertexId {
        self.origin[d]
    }

    pub fn twin(&self, d: DartId) -> DartId {
        self.twin[d]
    }

    pub fn twins(&self) -> &[DartId] {
        &self.twin
    }

    pub fn head(&self, d: DartId) -> VertexId {
        self.origin[self.twin[d]]
    }

    /// Next dart counterclockwise around the origin of `d`.
    pub fn next(&self, d: DartId) -> DartId {
        let v = self.origin[d];
        if d + 1 == self.offsets[v + 1] {
            self.offsets[v]
        } else {
            d + 1
        }
    }

    pub fn prev(&self, d: DartId) -> DartId {
        let v = self.origin[d];
        if d == self.offsets[v] {
            self.offsets[v + 1] - 1
        } else {
            d - 1
        }
    }

    /// Successor of `d` along its face boundary.
    pub fn face_successor(&self, d: DartId) -> DartId {
        self.next(self.twin[d])
    }

    pub fn darts_at(&self, v: VertexId) -> std::ops::Range<DartId> {
        self.offsets[v]..self.offsets[v + 1]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn edge_of(&self, d: DartId) -> EdgeId {
        self.edge_of[d]
    }

    /// The smaller dart of edge `e`.
    pub fn edge_dart(&self, e: EdgeId) -> DartId {
        self.edge_darts[e]
    }

    pub fn edge_endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let d = self.edge_darts[e];
        (self.origin[d], self.head(d))
    }

    /// Dart whose face is the designated outer face.
    pub fn outer_dart(&self) -> DartId {
        self.outer_dart
    }

    pub fn with_outer_dart(mut self, d: DartId) -> Result<Self> {
        if d >= self.dart_count() {
            return Err(EmbeddingError::UnknownDart(d));
        }
        self.outer_dart = d;
        Ok(self)
    }

    pub fn rotation(&self, v: VertexId) -> Vec<VertexId> {
        self.darts_at(v).map(|d| self.head(d)).collect()
    }

    pub fn rotations(&self) -> Vec<Vec<VertexId>> {
        (0..self.vertex_count()).map(|v| self.rotation(v)).collect()
    }

    /// Degree sequence indexed by vertex; a loop contributes 2.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count()).map(|v| self.degree(v)).collect()
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.degree(v) == 3)
    }

    pub fn has_loops(&self) -> bool {
        (0..self.edge_count()).any(|e| {
            let (a, b) = self.edge_endpoints(e);
            a == b
        })
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        (0..self.edge_count()).any(|e| {
            let (a, b) = self.edge_endpoints(e);
            !seen.insert((a.min(b), a.max(b)))
        })
    }

    pub fn is_simple(&self) -> bool {
        !self.has_loops() && !self.has_parallel_edges()
    }

    /// Number of face-successor orbits.
    pub fn face_count(&self) -> usize {
        let mut seen = vec![false; self.dart_count()];
        let mut count = 0;
        for start in 0..self.dart_count() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                d = self.face_successor(d);
            }
        }
        count
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for d in self.darts_at(v) {
                let w = self.head(d);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Plain adjacency view sharing this embedding's vertex and edge ids.
    pub fn graph(&self) -> Graph {
        let edges = (0..self.edge_count()).map(|e| self.edge_endpoints(e)).collect();
        let adj = (0..self.vertex_count())
            .map(|v| self.darts_at(v).map(|d| (self.head(d), self.edge_of(d))).collect())
            .collect();
        Graph::from_parts(adj, edges)
    }

    /// Whether `from_rotations(self.rotations())` reproduces this twin map.
    pub fn twins_recoverable(&self) -> bool {
        match Self::from_rotations(&self.rotations()) {
            Ok(e) => e.twin == self.twin,
            Err(_) => false,
        }
    }

    /// Deletes `edges` and any vertices left isolated. The surviving darts
    /// keep their rotation order; each connected remainder is returned as
    /// its own component.
    pub fn delete_edges(&self, edges: &[EdgeId]) -> Result<Vec<Component>> {
        let mut deleted = vec![false; self.edge_count()];
        for &e in edges {
            if e >= self.edge_count() {
                return Err(EmbeddingError::UnknownEdge(e));
            }
            deleted[e] = true;
        }
        let alive = |d: DartId| !deleted[self.edge_of[d]];
        let faces = self.faces();
        let mut touched_face = vec![false; faces.len()];
        for d in 0..self.dart_count() {
            if !alive(d) {
                touched_face[faces.face_of(d)] = true;
            }
        }

        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut comp_count = 0;
        for s in 0..n {
            if comp[s] != usize::MAX || !self.darts_at(s).any(alive) {
                continue;
            }
            comp[s] = comp_count;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for d in self.darts_at(v).filter(|&d| alive(d)) {
                    let w = self.head(d);
                    if comp[w] == usize::MAX {
                        comp[w] = comp_count;
                        stack.push(w);
                    }
                }
            }
            comp_count += 1;
        }

        let mut out = Vec::with_capacity(comp_count);
        for c in 0..comp_count {
            let vertex_origin: Vec<VertexId> = (0..n).filter(|&v| comp[v] == c).collect();
            let mut new_vertex = vec![usize::MAX; n];
            for (i, &v) in vertex_origin.iter().enumerate() {
                new_vertex[v] = i;
            }
            let mut new_dart = vec![usize::MAX; self.dart_count()];
            let mut dart_origin = Vec::new();
            let mut rotations = Vec::with_capacity(vertex_origin.len());
            for &v in &vertex_origin {
                let mut rot = Vec::new();
                for d in self.darts_at(v).filter(|&d| alive(d)) {
                    new_dart[d] = dart_origin.len();
                    dart_origin.push(d);
                    rot.push(new_vertex[self.head(d)]);
                }
                rotations.push(rot);
            }
            let twin: Vec<DartId> = dart_origin.iter().map(|&d| new_dart[self.twin[d]]).collect();
            let outer = if new_dart[self.outer_dart] != usize::MAX {
                new_dart[self.outer_dart]
            } else {
                dart_origin.iter().position(|&d| touched_face[faces.face_of(d)]).unwrap_or(0)
            };
            let embedding = Embedding::from_parts(&rotations, twin, outer)?;
            let edge_origin =
                (0..embedding.edge_count()).map(|e| self.edge_of[dart_origin[embedding.edge_dart(e)]]).collect();
            out.push(Component { embedding, vertex_origin, edge_origin });
        }
        Ok(out)
    }
}

/// A connected piece left after [`Embedding::delete_edges`], with maps back
/// to the source's vertex and edge ids.
#[derive(Debug, Clone)]
pub struct Component {
    pub embedding: Embedding,
    pub vertex_origin: Vec<VertexId>,
    pub edge_origin: Vec<EdgeId>,
}

/// Picks the component that carries every edge of `marker` (source edge ids).
pub fn component_containing(components: &[Component], marker: &[EdgeId]) -> Result<usize> {
    let mut found = None;
    for &e in marker {
        let owner = components.iter().position(|c| c.edge_origin.contains(&e));
        match (owner, found) {
            (None, _) => return Err(EmbeddingError::MarkerSplit),
            (Some(o), None) => found = Some(o),
            (Some(o), Some(f)) if o != f => return Err(EmbeddingError::MarkerSplit),
            _ => {}
        }
    }
    match (found, components.len()) {
        (Some(i), _) => Ok(i),
        (None, 1) => Ok(0),
        (None, _) => Err(EmbeddingError::MarkerSplit),
    }
}

/// Faces of an embedding as dart orbits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceMap {
    boundaries: Vec<Vec<DartId>>,
    dart_face: Vec<FaceId>,
}

impl FaceMap {
    pub fn len(&self) -> usize {
        self.boundaries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundaries.is_empty()
    }

    /// Boundary darts of face `f`, starting from its smallest dart.
    pub fn boundary(&self, f: FaceId) -> &[DartId] {
        &self.boundaries[f]
    }

    pub fn face_len(&self, f: FaceId) -> usize {
        self.boundaries[f].len()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.boundaries.iter().map(Vec::len).collect()
    }

    pub fn face_of(&self, d: DartId) -> FaceId {
        self.dart_face[d]
    }

    pub fn ids(&self) -> std::ops::Range<FaceId> {
        0..self.boundaries.len()
    }

    pub fn boundary_vertices(&self, emb: &Embedding, f: FaceId) -> Vec<VertexId> {
        self.boundaries[f].iter().map(|&d| emb.origin(d)).collect()
    }

    pub fn boundary_edges(&self, emb: &Embedding, f: FaceId) -> Vec<EdgeId> {
        self.boundaries[f].iter().map(|&d| emb.edge_of(d)).collect()
    }

    /// Whether the facial walk of `f` visits no vertex twice.
    pub fn is_simple_cycle(&self, emb: &Embedding, f: FaceId) -> bool {
        let mut vs = self.boundary_vertices(emb, f);
        let len = vs.len();
        vs.sort_unstable();
        vs.dedup();
        vs.len() == len
    }

    /// Faces on the two sides of each edge, smaller dart's face first.
    pub fn edge_faces(&self, emb: &Embedding) -> Vec<(FaceId, FaceId)> {
        (0..emb.edge_count())
            .map(|e| {
                let d = emb.edge_dart(e);
                (self.dart_face[d], self.dart_face[emb.twin(d)])
            })
            .collect()
    }

    pub fn adjacency(&self, emb: &Embedding) -> FaceAdjacency {
        let edge_faces = self.edge_faces(emb);
        let mut neighbors = vec![std::collections::BTreeSet::new(); self.len()];
        for &(a, b) in &edge_faces {
            neighbors[a].insert(b);
            neighbors[b].insert(a);
        }
        FaceAdjacency { neighbors, edge_faces }
    }
}

/// Face adjacency through shared edges. A bridge shows up as its face being
/// adjacent to itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceAdjacency {
    pub neighbors: Vec<std::collections::BTreeSet<FaceId>>,
    pub edge_faces: Vec<(FaceId, FaceId)>,
}

impl Embedding {
    /// Traces all faces. Face ids follow the smallest dart of each orbit, so
    /// the face of dart 0 is face 0.
    pub fn faces(&self) -> FaceMap {
        let mut dart_face = vec![usize::MAX; self.dart_count()];
        let mut boundaries = Vec::new();
        for start in 0..self.dart_count() {
            if dart_face[start] != usize::MAX {
                continue;
            }
            let id = boundaries.len();
            let mut walk = Vec::new();
            let mut d = start;
            while dart_face[d] == usize::MAX {
                dart_face[d] = id;
                walk.push(d);
                d = self.face_successor(d);
            }
            boundaries.push(walk);
        }
        FaceMap { boundaries, dart_face }
    }

    pub fn outer_face(&self, faces: &FaceMap) -> FaceId {
        faces.face_of(self.outer_dart)
    }
}

fn offsets_of(rotations: &[Vec<VertexId>]) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(rotations.len() + 1);
    offsets.push(0);
    for r in rotations {
        offsets.push(offsets.last().unwrap() + r.len());
    }
    offsets
}

enum PairClass {
    /// Darts from the smaller endpoint (`a`) and the larger one (`b`).
    Parallel {
        a: Vec<DartId>,
        b: Vec<DartId>,
    },
    Loops {
        darts: Vec<DartId>,
    },
}

fn pair_classes(rotations: &[Vec<VertexId>], offsets: &[usize]) -> Result<Vec<PairClass>> {
    let n = rotations.len();
    let mut occ: BTreeMap<(VertexId, VertexId), (Vec<DartId>, Vec<DartId>)> = BTreeMap::new();
    for (v, rot) in rotations.iter().enumerate() {
        for (i, &w) in rot.iter().enumerate() {
            if w >= n {
                return Err(EmbeddingError::VertexOutOfRange { vertex: v, neighbor: w });
            }
            let d = offsets[v] + i;
            let entry = occ.entry((v.min(w), v.max(w))).or_default();
            if v <= w {
                entry.0.push(d);
            } else {
                entry.1.push(d);
            }
        }
    }
    occ.into_iter()
        .map(|((u, v), (a, b))| {
            if u == v {
                if a.len() % 2 != 0 {
                    return Err(EmbeddingError::InconsistentAdjacency(u, v));
                }
                Ok(PairClass::Loops { darts: a })
            } else if a.len() != b.len() {
                Err(EmbeddingError::InconsistentAdjacency(u, v))
            } else {
                Ok(PairClass::Parallel { a, b })
            }
        })
        .collect()
}

fn twins_for(classes: &[PairClass], shifts: &[usize], dart_count: usize) -> Vec<DartId> {
    let mut twin = vec![usize::MAX; dart_count];
    for (class, &s) in classes.iter().zip(shifts) {
        match class {
            PairClass::Parallel { a, b } => {
                let m = a.len();
                for (t, &da) in a.iter().enumerate() {
                    let db = b[(m - 1 - t + s) % m];
                    twin[da] = db;
                    twin[db] = da;
                }
            }
            PairClass::Loops { darts } => {
                let m = darts.len();
                for t in 0..m / 2 {
                    twin[darts[t]] = darts[m - 1 - t];
                    twin[darts[m - 1 - t]] = darts[t];
                }
            }
        }
    }
    twin
}
