//! Adjacency view used by the searches. Unlike [`Embedding`](crate::Embedding)
//! it carries no rotation order, so it can also come from graph6 input.

use crate::embedding::{EdgeId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<(VertexId, EdgeId)>>,
    edges: Vec<(VertexId, VertexId)>,
}

impl Graph {
    pub(crate) fn from_parts(adj: Vec<Vec<(VertexId, EdgeId)>>, edges: Vec<(VertexId, VertexId)>) -> Self {
        Graph { adj, edges }
    }

    /// Builds a graph from an edge list; edge ids follow list order.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (id, &(a, b)) in edges.iter().enumerate() {
            adj[a].push((b, id));
            adj[b].push((a, id));
        }
        Graph { adj, edges: edges.to_vec() }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(a, b)| a == b)
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().any(|&(a, b)| !seen.insert((a.min(b), a.max(b))))
    }

    /// Smallest cycle length the graph could possibly have.
    pub fn min_cycle_length(&self) -> usize {
        if self.has_loops() {
            1
        } else if self.has_parallel_edges() {
            2
        } else {
            3
        }
    }

    pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        self.adj[a].iter().find(|&&(w, _)| w == b).map(|&(_, e)| e)
    }

    pub fn is_connected(&self) -> bool {
        self.components_without(&[], &[]) <= 1
    }

    /// Number of connected components once the given vertices and edges are
    /// removed. Used directly by the brute-force connectivity checks.
    pub fn components_without(&self, vertices: &[VertexId], edges: &[EdgeId]) -> usize {
        let n = self.vertex_count();
        let mut removed = vec![false; n];
        for &v in vertices {
            removed[v] = true;
        }
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if removed[s] || seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &(w, e) in &self.adj[v] {
                    if !removed[w] && !seen[w] && !edges.contains(&e) {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }
}
