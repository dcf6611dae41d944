//! Cycle spectra: exact enumeration, bounded interval search, girth,
//! circumference and gaps.
//!
//! All searches count their work in search-tree nodes so that a budget
//! gives the same answer on every machine.

mod circumference;
mod enumerate;
mod gaps;
mod girth;
mod interval;
mod witness;

use thiserror::Error;

pub use circumference::{circumference, circumference_of_embedding, CircumferenceResult};
pub use enumerate::{enumerate_spectrum, SpectrumReport};
pub use gaps::{gap_report, GapReport};
pub use girth::girth;
pub use interval::{exists_cycle_in_range, IntervalOutcome, IntervalResult};
pub use witness::CycleWitness;

use crate::embedding::{EdgeId, VertexId};
use crate::graph::Graph;

/// Node budget meaning "no limit".
pub const UNLIMITED: u64 = u64::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("bad interval [{0}, {1}]")]
    BadInterval(usize, usize),
    #[error("graph has no cycle")]
    Acyclic,
    #[error("spectrum enumeration did not complete within its budget")]
    SpectrumIncomplete,
}

/// Scratch space for the component bound shared by the searches: how many
/// vertices a path could still pick up, and whether it can get back home.
pub(crate) struct Reach {
    mark: Vec<u32>,
    epoch: u32,
    stack: Vec<VertexId>,
}

impl Reach {
    pub(crate) fn new(n: usize) -> Self {
        Reach { mark: vec![0; n], epoch: 0, stack: Vec::new() }
    }

    /// Size of the component of `from` among vertices that are not
    /// `blocked` and pass `allowed_vertex`, using only edges that pass
    /// `allowed_edge`, together with whether that component has an allowed
    /// edge to `home`.
    pub(crate) fn component(
        &mut self,
        g: &Graph,
        from: VertexId,
        home: VertexId,
        blocked: &[bool],
        allowed_vertex: impl Fn(VertexId) -> bool,
        allowed_edge: impl Fn(EdgeId) -> bool,
    ) -> (usize, bool) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.mark.iter_mut().for_each(|m| *m = 0);
            self.epoch = 1;
        }
        let epoch = self.epoch;
        self.mark[from] = epoch;
        self.stack.clear();
        self.stack.push(from);
        let mut count = 1;
        let mut touches_home = false;
        while let Some(v) = self.stack.pop() {
            for &(w, e) in g.neighbors(v) {
                if !allowed_edge(e) {
                    continue;
                }
                if w == home {
                    touches_home = true;
                    continue;
                }
                if blocked[w] || self.mark[w] == epoch || !allowed_vertex(w) {
                    continue;
                }
                self.mark[w] = epoch;
                count += 1;
                self.stack.push(w);
            }
        }
        (count, touches_home)
    }
}

/// Unweighted distances to `source` using allowed vertices and edges.
pub(crate) fn bfs_distances(
    g: &Graph,
    source: VertexId,
    allowed_vertex: impl Fn(VertexId) -> bool,
    allowed_edge: impl Fn(EdgeId) -> bool,
) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[source] = 0;
    let mut queue = std::collections::VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        for &(w, e) in g.neighbors(v) {
            if dist[w] == usize::MAX && allowed_edge(e) && allowed_vertex(w) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}
