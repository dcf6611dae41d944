use std::collections::VecDeque;

use super::{CycleWitness, SpectrumError};
use crate::graph::Graph;

/// Shortest cycle, by a BFS between the ends of every edge with that edge
/// removed. Loops give 1 and parallel edges 2.
pub fn girth(g: &Graph) -> Result<CycleWitness, SpectrumError> {
    let n = g.vertex_count();
    let mut best: Option<CycleWitness> = None;
    let mut parent = vec![(usize::MAX, usize::MAX); n];
    let mut dist = vec![usize::MAX; n];
    for (id, &(s, t)) in g.edges().iter().enumerate() {
        if s == t {
            return Ok(CycleWitness::new(vec![s], vec![id]));
        }
        let limit = best.as_ref().map_or(usize::MAX, |b| b.len());
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        'bfs: while let Some(v) = queue.pop_front() {
            if dist[v] + 2 >= limit {
                break;
            }
            for &(w, e) in g.neighbors(v) {
                if e == id || dist[w] != usize::MAX {
                    continue;
                }
                dist[w] = dist[v] + 1;
                parent[w] = (v, e);
                if w == t {
                    break 'bfs;
                }
                queue.push_back(w);
            }
        }
        if dist[t] == usize::MAX || dist[t] + 1 >= limit {
            continue;
        }
        // walk back from t to s, then close with the edge itself
        let mut vertices = vec![t];
        let mut edges = Vec::new();
        let mut v = t;
        while v != s {
            let (p, e) = parent[v];
            edges.push(e);
            vertices.push(p);
            v = p;
        }
        vertices.reverse();
        edges.reverse();
        edges.push(id);
        best = Some(CycleWitness::new(vertices, edges));
    }
    best.ok_or(SpectrumError::Acyclic)
}
