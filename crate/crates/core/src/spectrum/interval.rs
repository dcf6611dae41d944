use serde::Serialize;

use super::{bfs_distances, CycleWitness, Reach, SpectrumError};
use crate::embedding::{EdgeId, VertexId};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "witness", rename_all = "snake_case")]
pub enum IntervalOutcome {
    Found(CycleWitness),
    /// Search space exhausted: no cycle length lies in the interval.
    Empty,
    /// Budget ran out first.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalResult {
    #[serde(flatten)]
    pub outcome: IntervalOutcome,
    pub nodes_explored: u64,
}

/// Looks for a cycle whose length lies in `[lo, hi]`.
///
/// Every cycle is searched from its smallest edge (the anchor), using only
/// larger edges afterwards. A partial path is cut when even the shortest
/// way home overshoots `hi`, or when the vertices still reachable cannot
/// stretch it to `lo`.
pub fn exists_cycle_in_range(g: &Graph, lo: usize, hi: usize, budget: u64) -> Result<IntervalResult, SpectrumError> {
    if lo == 0 || lo > hi {
        return Err(SpectrumError::BadInterval(lo, hi));
    }
    let mut search = Search {
        g,
        lo,
        hi,
        budget,
        nodes: 0,
        anchor: 0,
        home: 0,
        dist: Vec::new(),
        on_path: vec![false; g.vertex_count()],
        path: Vec::new(),
        path_edges: Vec::new(),
        reach: Reach::new(g.vertex_count()),
    };
    for anchor in 0..g.edge_count() {
        let (s, t) = g.endpoints(anchor);
        if s == t {
            if lo <= 1 && 1 <= hi {
                let w = CycleWitness::new(vec![s], vec![anchor]);
                return Ok(search.finish(IntervalOutcome::Found(w)));
            }
            continue;
        }
        search.anchor = anchor;
        search.home = s;
        search.dist = bfs_distances(g, s, |_| true, |e| e > anchor);
        if search.dist[t] == usize::MAX || 1 + search.dist[t] > hi {
            continue;
        }
        search.path.clear();
        search.path_edges.clear();
        search.path.push(s);
        search.on_path[s] = true;
        match search.extend(t, anchor) {
            Step::Found => {
                let w = CycleWitness::new(search.path.clone(), search.path_edges.clone());
                return Ok(search.finish(IntervalOutcome::Found(w)));
            }
            Step::OutOfBudget => return Ok(search.finish(IntervalOutcome::Unknown)),
            Step::Exhausted => {}
        }
        search.on_path[s] = false;
    }
    Ok(search.finish(IntervalOutcome::Empty))
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Search<'a> {
    g: &'a Graph,
    lo: usize,
    hi: usize,
    budget: u64,
    nodes: u64,
    anchor: EdgeId,
    home: VertexId,
    dist: Vec<usize>,
    on_path: Vec<bool>,
    path: Vec<VertexId>,
    path_edges: Vec<EdgeId>,
    reach: Reach,
}

impl Search<'_> {
    fn finish(&self, outcome: IntervalOutcome) -> IntervalResult {
        IntervalResult { outcome, nodes_explored: self.nodes }
    }

    /// Path currently ends just before `v`, entered through edge `via`.
    fn extend(&mut self, v: VertexId, via: EdgeId) -> Step {
        if self.nodes >= self.budget {
            return Step::OutOfBudget;
        }
        self.nodes += 1;
        self.path.push(v);
        self.path_edges.push(via);
        self.on_path[v] = true;
        let len = self.path_edges.len();
        let g = self.g;
        let anchor = self.anchor;
        for &(w, e) in g.neighbors(v) {
            if e <= anchor || w == v {
                continue;
            }
            if w == self.home {
                if (self.lo..=self.hi).contains(&(len + 1)) {
                    self.path_edges.push(e);
                    return Step::Found;
                }
                continue;
            }
            if self.on_path[w] || self.dist[w] == usize::MAX || len + 1 + self.dist[w] > self.hi {
                continue;
            }
            if len + 1 + self.dist[w] < self.lo {
                let (room, home) = self.reach.component(g, w, self.home, &self.on_path, |_| true, |x| x > anchor);
                if !home || len + 1 + room < self.lo {
                    continue;
                }
            }
            match self.extend(w, e) {
                Step::Exhausted => {}
                other => return other,
            }
        }
        self.on_path[v] = false;
        self.path.pop();
        self.path_edges.pop();
        Step::Exhausted
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{catalog, make_fan_ring};
    use crate::spectrum::UNLIMITED;

    #[test]
    fn k4_triangle() {
        let g = catalog("k4").unwrap().graph();
        let r = exists_cycle_in_range(&g, 3, 4, UNLIMITED).unwrap();
        match r.outcome {
            IntervalOutcome::Found(w) => {
                assert_eq!(w.len(), 3);
                assert!(w.validate(&g));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dodecahedron_has_no_short_cycle() {
        let g = catalog("dodecahedron").unwrap().graph();
        let r = exists_cycle_in_range(&g, 3, 4, UNLIMITED).unwrap();
        assert_eq!(r.outcome, IntervalOutcome::Empty);
    }

    #[test]
    fn fan_ring_window() {
        let g = make_fan_ring(4).graph();
        assert_eq!(exists_cycle_in_range(&g, 5, 11, UNLIMITED).unwrap().outcome, IntervalOutcome::Empty);
        let r = exists_cycle_in_range(&g, 16, 16, UNLIMITED).unwrap();
        assert!(matches!(r.outcome, IntervalOutcome::Found(ref w) if w.len() == 16 && w.validate(&g)));
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let g = catalog("dodecahedron").unwrap().graph();
        let r = exists_cycle_in_range(&g, 21, 30, 10).unwrap();
        assert_eq!(r.outcome, IntervalOutcome::Unknown);
        assert_eq!(r.nodes_explored, 10);
    }

    #[test]
    fn bad_interval() {
        let g = catalog("k4").unwrap().graph();
        assert_eq!(exists_cycle_in_range(&g, 5, 4, 1), Err(SpectrumError::BadInterval(5, 4)));
    }

    #[test]
    fn multigraph_lengths() {
        let theta = catalog("theta").unwrap().graph();
        let r = exists_cycle_in_range(&theta, 2, 2, UNLIMITED).unwrap();
        assert!(matches!(r.outcome, IntervalOutcome::Found(ref w) if w.len() == 2));
        assert_eq!(exists_cycle_in_range(&theta, 3, 9, UNLIMITED).unwrap().outcome, IntervalOutcome::Empty);
        let looped = Graph::from_edges(2, &[(0, 1), (1, 1), (0, 1)]);
        let r = exists_cycle_in_range(&looped, 1, 1, UNLIMITED).unwrap();
        assert!(matches!(r.outcome, IntervalOutcome::Found(ref w) if w.len() == 1));
    }
}
