use std::collections::BTreeMap;

use serde::Serialize;

use super::{bfs_distances, CycleWitness, Reach};
use crate::embedding::{EdgeId, VertexId};
use crate::graph::Graph;

/// Cycle lengths found within `window`, one witness per length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub window: (usize, usize),
    pub present: BTreeMap<usize, CycleWitness>,
    /// The whole window was searched, so absent lengths are certified.
    pub complete: bool,
    pub nodes_explored: u64,
}

impl SpectrumReport {
    pub fn lengths(&self) -> Vec<usize> {
        self.present.keys().copied().collect()
    }

    pub fn contains(&self, len: usize) -> bool {
        self.present.contains_key(&len)
    }
}

/// Enumerates the cycle spectrum over `[shortest possible, |V|]`.
///
/// Paths are rooted at each vertex `r` and stay on vertices `>= r`; a cycle
/// closes back to `r` only through an edge larger than the one it left by,
/// so each cycle is seen once. Branches that can only produce lengths
/// already recorded are skipped.
pub fn enumerate_spectrum(g: &Graph, budget: u64) -> SpectrumReport {
    let n = g.vertex_count();
    let window = (g.min_cycle_length(), n.max(g.min_cycle_length()));
    let mut e = Enumerator {
        g,
        window,
        budget,
        nodes: 0,
        root: 0,
        first_edge: 0,
        dist: Vec::new(),
        on_path: vec![false; n],
        path: Vec::new(),
        path_edges: Vec::new(),
        present: BTreeMap::new(),
        reach: Reach::new(n),
    };
    for (id, &(a, b)) in g.edges().iter().enumerate() {
        if a == b {
            e.present.entry(1).or_insert_with(|| CycleWitness::new(vec![a], vec![id]));
            break;
        }
    }
    let mut complete = true;
    for r in 0..n {
        if e.saturated() {
            break;
        }
        e.root = r;
        e.dist = bfs_distances(g, r, |v| v >= r, |_| true);
        e.path.clear();
        e.path_edges.clear();
        e.path.push(r);
        e.on_path[r] = true;
        let mut out_of_budget = false;
        for &(w, first) in g.neighbors(r) {
            if w <= r {
                continue;
            }
            e.first_edge = first;
            if !e.extend(w, first) {
                out_of_budget = true;
                break;
            }
        }
        e.on_path[r] = false;
        if out_of_budget {
            complete = false;
            break;
        }
    }
    SpectrumReport { window, present: e.present, complete, nodes_explored: e.nodes }
}

struct Enumerator<'a> {
    g: &'a Graph,
    window: (usize, usize),
    budget: u64,
    nodes: u64,
    root: VertexId,
    first_edge: EdgeId,
    dist: Vec<usize>,
    on_path: Vec<bool>,
    path: Vec<VertexId>,
    path_edges: Vec<EdgeId>,
    present: BTreeMap<usize, CycleWitness>,
    reach: Reach,
}

impl Enumerator<'_> {
    fn saturated(&self) -> bool {
        self.present.len() == self.window.1 - self.window.0 + 1
    }

    fn missing_in(&self, lo: usize, hi: usize) -> bool {
        let lo = lo.max(self.window.0);
        let hi = hi.min(self.window.1);
        (lo..=hi).any(|l| !self.present.contains_key(&l))
    }

    /// Returns false when the budget runs out.
    fn extend(&mut self, v: VertexId, via: EdgeId) -> bool {
        if self.nodes >= self.budget {
            return false;
        }
        self.nodes += 1;
        self.path.push(v);
        self.path_edges.push(via);
        self.on_path[v] = true;
        let len = self.path_edges.len();
        let g = self.g;
        let root = self.root;
        let mut ok = true;
        for &(w, e) in g.neighbors(v) {
            if w == v || e == via {
                continue;
            }
            if w == root {
                if e > self.first_edge && !self.present.contains_key(&(len + 1)) {
                    let mut edges = self.path_edges.clone();
                    edges.push(e);
                    self.present.insert(len + 1, CycleWitness::new(self.path.clone(), edges));
                }
                continue;
            }
            if w < root || self.on_path[w] || self.dist[w] == usize::MAX {
                continue;
            }
            let shortest = len + 1 + self.dist[w];
            if !self.missing_in(shortest, self.window.1) {
                continue;
            }
            let (room, home) = self.reach.component(g, w, root, &self.on_path, |x| x >= root, |_| true);
            if !home || !self.missing_in(shortest, len + 1 + room) {
                continue;
            }
            if !self.extend(w, e) {
                ok = false;
                break;
            }
        }
        self.on_path[v] = false;
        self.path.pop();
        self.path_edges.pop();
        ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{catalog, make_dn, make_fan_ring, make_hk, prism, random_c3cp};
    use crate::spectrum::UNLIMITED;

    /// Independent oracle: `reach[mask][v]` says some path starts at the
    /// lowest vertex of `mask`, visits exactly `mask` and ends at `v`. A
    /// cycle on vertex set `mask` exists iff such a path ends next to the
    /// start. Simple graphs on at most 16 vertices.
    fn subset_dp_spectrum(g: &Graph) -> Vec<usize> {
        let n = g.vertex_count();
        assert!(n <= 16);
        let mut adj = vec![0u32; n];
        for &(a, b) in g.edges() {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        let full = 1usize << n;
        let mut reach = vec![0u32; full];
        for s in 0..n {
            reach[1 << s] = 1 << s;
        }
        let mut lengths = std::collections::BTreeSet::new();
        for mask in 1..full {
            let ends = reach[mask];
            if ends == 0 {
                continue;
            }
            let low = mask.trailing_zeros() as usize;
            let size = mask.count_ones() as usize;
            for (v, &nv) in adj.iter().enumerate().take(n) {
                if ends & (1 << v) == 0 {
                    continue;
                }
                if size >= 3 && nv & (1 << low) != 0 {
                    lengths.insert(size);
                }
                let mut nbrs = nv & !(mask as u32);
                while nbrs != 0 {
                    let w = nbrs.trailing_zeros() as usize;
                    nbrs &= nbrs - 1;
                    if w > low {
                        reach[mask | (1 << w)] |= 1 << w;
                    }
                }
            }
        }
        lengths.into_iter().collect()
    }

    fn oracle_corpus() -> Vec<Graph> {
        let mut gs: Vec<Graph> = ["k4", "prism", "cube", "pentagonal-prism", "truncated-tetrahedron"]
            .iter()
            .map(|n| catalog(n).unwrap().graph())
            .collect();
        gs.push(make_fan_ring(2).graph());
        gs.push(make_fan_ring(3).graph());
        gs.push(make_fan_ring(4).graph());
        gs.push(make_hk(1).gadget.graph());
        gs.push(make_hk(2).gadget.graph());
        gs.push(make_hk(3).gadget.graph());
        gs.push(make_dn(3).embedding.graph());
        gs.push(make_dn(4).embedding.graph());
        gs.push(prism(7).graph());
        for seed in 0..12 {
            gs.push(random_c3cp(6 + 2 * (seed as usize % 6), seed).unwrap().graph());
        }
        gs
    }

    #[test]
    fn matches_subset_oracle() {
        for g in oracle_corpus() {
            let r = enumerate_spectrum(&g, UNLIMITED);
            assert!(r.complete);
            assert_eq!(r.lengths(), subset_dp_spectrum(&g));
            for w in r.present.values() {
                assert!(w.validate(&g));
            }
        }
    }

    #[test]
    fn known_spectra() {
        let k4 = catalog("k4").unwrap().graph();
        assert_eq!(enumerate_spectrum(&k4, UNLIMITED).lengths(), vec![3, 4]);
        let cube = catalog("cube").unwrap().graph();
        assert_eq!(enumerate_spectrum(&cube, UNLIMITED).lengths(), vec![4, 6, 8]);
        let h2 = make_hk(2).gadget.graph();
        assert_eq!(enumerate_spectrum(&h2, UNLIMITED).lengths(), vec![3, 4, 5]);
    }

    #[test]
    fn fan_ring_four() {
        let g = make_fan_ring(4).graph();
        let r = enumerate_spectrum(&g, UNLIMITED);
        assert!(r.complete);
        let l = r.lengths();
        assert!(l.starts_with(&[3, 4]));
        assert!(l[2..].iter().all(|&x| (12..=16).contains(&x)));
        assert!(r.contains(12) && r.contains(16));
    }

    #[test]
    fn multigraph_spectrum() {
        let theta = catalog("theta").unwrap().graph();
        let r = enumerate_spectrum(&theta, UNLIMITED);
        assert_eq!(r.window, (2, 2));
        assert_eq!(r.lengths(), vec![2]);
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0), (0, 0), (1, 2)]);
        assert_eq!(enumerate_spectrum(&g, UNLIMITED).lengths(), vec![1, 2, 3]);
    }

    #[test]
    fn budget_marks_incomplete() {
        let g = catalog("dodecahedron").unwrap().graph();
        let r = enumerate_spectrum(&g, 5);
        assert!(!r.complete);
        assert_eq!(r.nodes_explored, 5);
    }
}
