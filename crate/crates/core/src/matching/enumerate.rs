use super::{PerfectMatching, UNMATCHED};
use crate::graph::{EdgeId, Graph};

struct Frame {
    vertex: usize,
    next: usize,
    chosen: Option<(usize, EdgeId)>,
}

/// Backtracking enumeration of all perfect matchings. Always extends from the
/// uncovered vertex of least index and tries its neighbours in increasing
/// order, so the stream order is fixed by the graph alone.
pub struct MatchingIter<'g> {
    graph: &'g Graph,
    mate: Vec<usize>,
    frames: Vec<Frame>,
    started: bool,
    done: bool,
}

impl<'g> MatchingIter<'g> {
    fn new(graph: &'g Graph) -> Self {
        Self {
            graph,
            mate: vec![UNMATCHED; graph.order()],
            frames: Vec::with_capacity(graph.order() / 2),
            started: false,
            done: false,
        }
    }

    fn first_uncovered(&self, from: usize) -> Option<usize> {
        (from..self.graph.order()).find(|&v| self.mate[v] == UNMATCHED)
    }

    fn current(&self) -> PerfectMatching {
        let edges = self.frames.iter().filter_map(|f| f.chosen.map(|(_, e)| e));
        PerfectMatching::from_edges(self.graph, edges).expect("search state is a perfect matching")
    }
}

impl Iterator for MatchingIter<'_> {
    type Item = PerfectMatching;

    fn next(&mut self) -> Option<PerfectMatching> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            let order = self.graph.order();
            if order % 2 == 1 {
                self.done = true;
                return None;
            }
            if order == 0 {
                self.done = true;
                return Some(self.current());
            }
            self.frames.push(Frame {
                vertex: 0,
                next: 0,
                chosen: None,
            });
        }
        loop {
            let Some(top) = self.frames.last_mut() else {
                self.done = true;
                return None;
            };
            let u = top.vertex;
            if let Some((w, _)) = top.chosen.take() {
                self.mate[u] = UNMATCHED;
                self.mate[w] = UNMATCHED;
            }
            let nbrs = self.graph.neighbors(u);
            let pick = (top.next..nbrs.len()).find(|&k| self.mate[nbrs[k].0] == UNMATCHED);
            match pick {
                Some(k) => {
                    let (w, e) = nbrs[k];
                    top.next = k + 1;
                    top.chosen = Some((w, e));
                    self.mate[u] = w;
                    self.mate[w] = u;
                    match self.first_uncovered(u + 1) {
                        None => return Some(self.current()),
                        Some(v) => self.frames.push(Frame {
                            vertex: v,
                            next: 0,
                            chosen: None,
                        }),
                    }
                }
                None => {
                    self.frames.pop();
                }
            }
        }
    }
}

pub fn enumerate_matchings(graph: &Graph) -> MatchingIter<'_> {
    MatchingIter::new(graph)
}

pub fn count_matchings(graph: &Graph) -> usize {
    enumerate_matchings(graph).count()
}
