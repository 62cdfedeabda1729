//! Perfect matchings, their enumeration, and alternating cycles.

mod alternating;
mod blossom;
mod enumerate;

pub use alternating::{
    alternating_four_cycles, find_alternating_cycle, find_alternating_cycle_in, is_forcing_set,
    AlternatingCycle, ForcingVerdict,
};
pub(crate) use alternating::find_alternating_cycle_avoiding;
pub use enumerate::{count_matchings, enumerate_matchings, MatchingIter};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, Graph};

pub const UNMATCHED: usize = usize::MAX;

/// A perfect matching of some ambient [`Graph`], as sorted edge ids plus the
/// partner of every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PerfectMatching {
    edges: Vec<EdgeId>,
    mate: Vec<usize>,
    mate_edge: Vec<EdgeId>,
}

impl PerfectMatching {
    pub fn from_edges(graph: &Graph, edges: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        let mut edges: Vec<EdgeId> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        let mut mate = vec![UNMATCHED; graph.order()];
        let mut mate_edge = vec![UNMATCHED; graph.order()];
        for &e in &edges {
            if e >= graph.size() {
                return Err(Error::NotAMatching(format!("edge id {e} out of range")));
            }
            let (a, b) = graph.edge(e);
            if mate[a] != UNMATCHED || mate[b] != UNMATCHED {
                return Err(Error::NotAMatching(format!(
                    "vertex {} covered twice",
                    if mate[a] != UNMATCHED { a } else { b }
                )));
            }
            mate[a] = b;
            mate[b] = a;
            mate_edge[a] = e;
            mate_edge[b] = e;
        }
        if let Some(v) = mate.iter().position(|&w| w == UNMATCHED) {
            return Err(Error::NotAMatching(format!("vertex {v} uncovered")));
        }
        Ok(Self {
            edges,
            mate,
            mate_edge,
        })
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn mate(&self, v: usize) -> usize {
        self.mate[v]
    }

    pub fn mate_edge(&self, v: usize) -> EdgeId {
        self.mate_edge[v]
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn edge_set(&self, graph: &Graph) -> EdgeSet {
        let mut set = EdgeSet::with_capacity(graph.size());
        for &e in &self.edges {
            set.insert(e);
        }
        set
    }

    /// Position of `e` in [`Self::edges`], if matched.
    pub fn index_of(&self, e: EdgeId) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }
}
