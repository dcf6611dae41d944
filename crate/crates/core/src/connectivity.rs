//! Vertex connectivity levels and 2-edge-cuts.

use serde::Serialize;

use crate::embedding::{EdgeId, VertexId};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ConnectivityLevel {
    Disconnected,
    One,
    Two,
    AtLeastThree,
}

/// Classifies vertex connectivity: a cut vertex gives `One`, a separating
/// vertex pair gives `Two`. Parallel edges and loops are irrelevant here.
///
/// For each vertex `u` the articulation points of `G - u` are found with a
/// lowpoint DFS, which is the same question as removing every pair `{u, v}`.
pub fn connectivity_level(g: &Graph) -> ConnectivityLevel {
    let n = g.vertex_count();
    if !g.is_connected() {
        return ConnectivityLevel::Disconnected;
    }
    let mut removed = vec![false; n];
    if !articulation_points(g, &removed).is_empty() {
        return ConnectivityLevel::One;
    }
    for u in 0..n {
        removed[u] = true;
        let cut = !articulation_points(g, &removed).is_empty();
        removed[u] = false;
        if cut {
            return ConnectivityLevel::Two;
        }
    }
    ConnectivityLevel::AtLeastThree
}

/// Articulation points of the subgraph induced on non-removed vertices,
/// assumed connected.
fn articulation_points(g: &Graph, removed: &[bool]) -> Vec<VertexId> {
    let n = g.vertex_count();
    let Some(root) = (0..n).find(|&v| !removed[v]) else {
        return Vec::new();
    };
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;
    // (vertex, parent, next neighbor index, child count)
    let mut stack: Vec<(VertexId, VertexId, usize, usize)> = vec![(root, usize::MAX, 0, 0)];
    disc[root] = timer;
    low[root] = timer;
    timer += 1;
    while let Some(top) = stack.last_mut() {
        let (v, parent, idx, _) = *top;
        if idx < g.neighbors(v).len() {
            top.2 += 1;
            let (w, _) = g.neighbors(v)[idx];
            if removed[w] || w == v {
                continue;
            }
            if disc[w] == usize::MAX {
                top.3 += 1;
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                stack.push((w, v, 0, 0));
            } else if w != parent {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            let (_, _, _, children) = stack.pop().unwrap();
            if let Some(&(p, _, _, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if stack.len() > 1 && low[v] >= disc[p] {
                    is_cut[p] = true;
                }
            } else if children > 1 {
                is_cut[v] = true;
            }
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

/// Bridges of the graph with `skip` removed, tracking edge ids so parallel
/// edges are handled.
pub(crate) fn bridges_without(g: &Graph, skip: Option<EdgeId>) -> Vec<EdgeId> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut out = Vec::new();
    let mut timer = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, edge used to enter, next neighbor index)
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, via, idx) = *top;
            if idx < g.neighbors(v).len() {
                top.2 += 1;
                let (w, e) = g.neighbors(v)[idx];
                if Some(e) == skip || Some(e) == via {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, Some(e), 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        out.push(via.unwrap());
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoEdgeCuts {
    /// Unordered pairs `(e, f)` with `e < f`, neither a bridge.
    pub pairs: Vec<(EdgeId, EdgeId)>,
    /// Bridges; any pair containing one disconnects trivially, so they are
    /// listed here instead of in `pairs`.
    pub bridges: Vec<EdgeId>,
}

impl TwoEdgeCuts {
    /// Every edge appearing in some 2-edge-cut.
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut es: Vec<EdgeId> = self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        es.sort_unstable();
        es.dedup();
        es
    }
}

/// All 2-edge-cuts: for each non-bridge `e`, the bridges of `G - e`.
pub fn two_edge_cuts(g: &Graph) -> TwoEdgeCuts {
    let bridges = bridges_without(g, None);
    let mut pairs = Vec::new();
    for e in 0..g.edge_count() {
        if bridges.binary_search(&e).is_ok() {
            continue;
        }
        for f in bridges_without(g, Some(e)) {
            if f > e && bridges.binary_search(&f).is_err() {
                pairs.push((e, f));
            }
        }
    }
    pairs.sort_unstable();
    TwoEdgeCuts { pairs, bridges }
}
