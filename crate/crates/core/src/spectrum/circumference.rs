use serde::Serialize;

use super::{girth, CycleWitness, Reach, SpectrumError};
use crate::embedding::{EdgeId, Embedding, VertexId};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircumferenceResult {
    pub lower_bound: usize,
    pub witness: CycleWitness,
    /// The search finished, so no longer cycle exists.
    pub exact: bool,
    pub nodes_explored: u64,
}

/// Longest cycle by branch and bound, seeded with the girth witness.
pub fn circumference(g: &Graph, budget: u64) -> Result<CircumferenceResult, SpectrumError> {
    let seed = girth(g)?;
    Ok(longest_cycle(g, seed, budget))
}

/// As [`circumference`], seeded with the longest facial cycle instead.
pub fn circumference_of_embedding(e: &Embedding, budget: u64) -> Result<CircumferenceResult, SpectrumError> {
    let g = e.graph();
    let faces = e.faces();
    let seed = faces
        .ids()
        .filter_map(|f| CycleWitness::from_face(e, &faces, f))
        .max_by_key(|w| w.len())
        .map_or_else(|| girth(&g), Ok)?;
    Ok(longest_cycle(&g, seed, budget))
}

fn longest_cycle(g: &Graph, seed: CycleWitness, budget: u64) -> CircumferenceResult {
    let n = g.vertex_count();
    let mut s = Bnb {
        g,
        budget,
        nodes: 0,
        root: 0,
        first_edge: 0,
        on_path: vec![false; n],
        path: Vec::new(),
        path_edges: Vec::new(),
        best: seed,
        reach: Reach::new(n),
    };
    let mut exact = true;
    for r in 0..n {
        // a cycle with smallest vertex r uses at most n - r vertices
        if n - r <= s.best.len() {
            break;
        }
        s.root = r;
        s.path.clear();
        s.path_edges.clear();
        s.path.push(r);
        s.on_path[r] = true;
        let mut stopped = false;
        for &(w, e) in g.neighbors(r) {
            if w <= r {
                continue;
            }
            s.first_edge = e;
            if !s.extend(w, e) {
                stopped = true;
                break;
            }
        }
        s.on_path[r] = false;
        if stopped {
            exact = false;
            break;
        }
    }
    CircumferenceResult { lower_bound: s.best.len(), witness: s.best, exact, nodes_explored: s.nodes }
}

struct Bnb<'a> {
    g: &'a Graph,
    budget: u64,
    nodes: u64,
    root: VertexId,
    first_edge: EdgeId,
    on_path: Vec<bool>,
    path: Vec<VertexId>,
    path_edges: Vec<EdgeId>,
    best: CycleWitness,
    reach: Reach,
}

impl Bnb<'_> {
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
                if e != self.first_edge && len + 1 > self.best.len() {
                    let mut edges = self.path_edges.clone();
                    edges.push(e);
                    self.best = CycleWitness::new(self.path.clone(), edges);
                }
                continue;
            }
            if w < root || self.on_path[w] {
                continue;
            }
            let (room, home) = self.reach.component(g, w, root, &self.on_path, |x| x >= root, |_| true);
            if !home || len + 1 + room <= self.best.len() {
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
    use crate::constructions::{catalog, make_fan_ring, make_hk, random_c3cp};
    use crate::spectrum::{enumerate_spectrum, UNLIMITED};

    #[test]
    fn small_exact() {
        let k4 = catalog("k4").unwrap();
        let r = circumference(&k4.graph(), UNLIMITED).unwrap();
        assert_eq!((r.lower_bound, r.exact), (4, true));
        let h3 = make_hk(3).gadget;
        let r = circumference_of_embedding(&h3, UNLIMITED).unwrap();
        assert_eq!((r.lower_bound, r.exact), (7, true));
        assert!(r.witness.validate(&h3.graph()));
        let fr = make_fan_ring(2);
        assert_eq!(circumference(&fr.graph(), UNLIMITED).unwrap().lower_bound, 8);
    }

    #[test]
    fn agrees_with_spectrum_max() {
        for seed in 0..8 {
            let e = random_c3cp(8 + 2 * seed as usize, seed).unwrap();
            let g = e.graph();
            let spec = enumerate_spectrum(&g, UNLIMITED);
            let c = circumference_of_embedding(&e, UNLIMITED).unwrap();
            assert!(c.exact);
            assert_eq!(c.lower_bound, *spec.lengths().last().unwrap());
        }
    }

    #[test]
    fn budget_keeps_the_seed() {
        let e = catalog("dodecahedron").unwrap();
        let r = circumference_of_embedding(&e, 0).unwrap();
        assert!(!r.exact);
        assert_eq!(r.lower_bound, 5);
    }
}
