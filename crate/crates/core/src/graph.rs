//! Plain undirected simple graphs on vertices `0..n`.
//!
//! Edges are stored once, as `(a, b)` with `a < b`, and sorted; an edge id is
//! its position in that sorted list. Everything downstream (matchings, cycles,
//! subgraphs) talks in edge ids of the ambient graph.

use fixedbitset::FixedBitSet;

pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    /// Per vertex: `(neighbor, edge id)` sorted by neighbor.
    adjacency: Vec<Vec<(usize, EdgeId)>>,
}

impl Graph {
    /// Builds a graph from an edge list. Loops and duplicate edges are
    /// reported as `Err((a, b))` with the offending pair.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self, (usize, usize)>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            assert!(a < order && b < order, "edge ({a},{b}) out of range");
            if a == b {
                return Err((a, b));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(w[0]);
        }
        let mut adjacency = vec![Vec::new(); order];
        for (id, &(a, b)) in list.iter().enumerate() {
            adjacency[a].push((b, id));
            adjacency[b].push((a, id));
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Self {
            order,
            edges: list,
            adjacency,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (usize, usize) {
        self.edges[id]
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<EdgeId> {
        self.adjacency[a]
            .binary_search_by_key(&b, |&(w, _)| w)
            .ok()
            .map(|pos| self.adjacency[a][pos].1)
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        self.edge_between(a, b).is_some()
    }

    /// All edge ids, as a full [`EdgeSet`].
    pub fn all_edges(&self) -> EdgeSet {
        let mut set = EdgeSet::with_capacity(self.size());
        set.insert_range(..);
        set
    }

    /// Edge set of the subgraph induced by `vertices`.
    pub fn induced_edges(&self, vertices: &FixedBitSet) -> EdgeSet {
        let mut set = EdgeSet::with_capacity(self.size());
        for (id, &(a, b)) in self.edges.iter().enumerate() {
            if vertices.contains(a) && vertices.contains(b) {
                set.insert(id);
            }
        }
        set
    }

    /// Proper 2-colouring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.order];
        let mut stack = Vec::new();
        for start in 0..self.order {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            stack.push(start);
            while let Some(v) = stack.pop() {
                let c = colour[v].unwrap();
                for &(w, _) in &self.adjacency[v] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(|c| c.unwrap()).collect())
    }
}

/// A subset of edge ids of some ambient [`Graph`].
pub type EdgeSet = FixedBitSet;

/// A subset of vertices of some ambient [`Graph`].
pub type VertexSet = FixedBitSet;
