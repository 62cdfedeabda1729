//! Quadriculated tori `T(n, m, r)`.
//!
//! `T(n, m, r)` is an `n x m` chessboard whose left and right sides are glued
//! and whose top and bottom sides are identified with a torsion of `r`
//! squares. Vertex `v[i][j]` (row `i`, column `j`) has linear index
//! `i * m + j`. Its neighbours are `v[i][j±1 mod m]`, `v[i±1][j]` inside the
//! board, and across the seam `v[0][j] ~ v[n-1][(m - r + j) mod m]`.

mod bands;
mod io;
mod star;

pub use bands::Band;
pub use io::{parse_edge_list, EdgeRecord, ParsedEdgeList};
pub use star::{check_star, star_map, star_params, StarCheck, StarMap, StarParams};

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexSet};

/// The triple `(n, m, r)`: rows, columns (squares per row) and torsion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TorusParams {
    pub n: usize,
    pub m: usize,
    pub r: usize,
}

impl TorusParams {
    /// Checks `n >= 1`, `m >= 2` and `1 <= r <= m`. Whether the resulting
    /// graph is simple is decided by [`build_torus`].
    pub fn new(n: usize, m: usize, r: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("row count must be positive".into()));
        }
        if m < 2 {
            return Err(Error::InvalidParams(format!("column count {m} < 2")));
        }
        if r == 0 || r > m {
            return Err(Error::InvalidParams(format!(
                "torsion {r} outside 1..={m}"
            )));
        }
        Ok(Self { n, m, r })
    }

    /// `gcd(r, m)`, the number of I-cycles.
    pub fn g(&self) -> usize {
        self.r.gcd(&self.m)
    }

    pub fn vertex_count(&self) -> usize {
        self.n * self.m
    }
}

impl fmt::Display for TorusParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{},{})", self.n, self.m, self.r)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId {
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v[{},{}]", self.i, self.j)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeKind {
    Horizontal,
    Vertical,
}

impl EdgeKind {
    pub fn tag(self) -> char {
        match self {
            EdgeKind::Horizontal => 'h',
            EdgeKind::Vertical => 'v',
        }
    }
}

/// Orientation of an edge on the board: stepping from `tail` to `head` moves
/// one square right (horizontal) or one square down (vertical), possibly
/// across a seam.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeInfo {
    pub kind: EdgeKind,
    pub tail: usize,
    pub head: usize,
}

/// The six parity classes of tori that admit a perfect matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TorusClass {
    /// `T(2n, 2m, 2r)`
    EeEven,
    /// `T(2n, 2m, 2r-1)`
    EeOdd,
    /// `T(2n+1, 2m, 2r)`
    OeEven,
    /// `T(2n+1, 2m, 2r-1)`, the unsolved class.
    OeOdd,
    /// `T(2n, 2m+1, 2r)`
    EoEven,
    /// `T(2n, 2m+1, 2r-1)`
    EoOdd,
}

impl TorusClass {
    pub const ALL: [TorusClass; 6] = [
        TorusClass::EeEven,
        TorusClass::EeOdd,
        TorusClass::OeEven,
        TorusClass::OeOdd,
        TorusClass::EoEven,
        TorusClass::EoOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TorusClass::EeEven => "EE-even",
            TorusClass::EeOdd => "EE-odd",
            TorusClass::OeEven => "OE-even",
            TorusClass::OeOdd => "OE-odd",
            TorusClass::EoEven => "EO-even",
            TorusClass::EoOdd => "EO-odd",
        }
    }

    /// The class pattern written with the normalised parameters.
    pub fn pattern(self) -> &'static str {
        match self {
            TorusClass::EeEven => "T(2n,2m,2r)",
            TorusClass::EeOdd => "T(2n,2m,2r-1)",
            TorusClass::OeEven => "T(2n+1,2m,2r)",
            TorusClass::OeOdd => "T(2n+1,2m,2r-1)",
            TorusClass::EoEven => "T(2n,2m+1,2r)",
            TorusClass::EoOdd => "T(2n,2m+1,2r-1)",
        }
    }

    pub fn is_solved(self) -> bool {
        self != TorusClass::OeOdd
    }
}

impl fmt::Display for TorusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TorusClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TorusClass::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParams(format!("unknown class `{s}`")))
    }
}

/// A class together with the normalised parameters `(n', m', r')` that
/// instantiate its pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassTag {
    pub class: TorusClass,
    pub n: usize,
    pub m: usize,
    pub r: usize,
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} with n'={}, m'={}, r'={}",
            self.class,
            self.class.pattern(),
            self.n,
            self.m,
            self.r
        )
    }
}

pub fn classify(params: TorusParams) -> Result<ClassTag> {
    let TorusParams { n, m, r } = params;
    let r_even = r % 2 == 0;
    let r_half = if r_even { r / 2 } else { r.div_ceil(2) };
    let (class, n2, m2) = match (n % 2 == 0, m % 2 == 0) {
        (true, true) => (
            if r_even { TorusClass::EeEven } else { TorusClass::EeOdd },
            n / 2,
            m / 2,
        ),
        (false, true) => (
            if r_even { TorusClass::OeEven } else { TorusClass::OeOdd },
            (n - 1) / 2,
            m / 2,
        ),
        (true, false) => (
            if r_even { TorusClass::EoEven } else { TorusClass::EoOdd },
            n / 2,
            (m - 1) / 2,
        ),
        (false, false) => return Err(Error::OddOrder { n, m, r }),
    };
    Ok(ClassTag {
        class,
        n: n2,
        m: m2,
        r: r_half,
    })
}

/// `T(n, m, r)` as a labelled simple graph.
#[derive(Debug, Clone)]
pub struct TorusGraph {
    params: TorusParams,
    graph: Graph,
    info: Vec<EdgeInfo>,
}

pub fn build_torus(params: TorusParams) -> Result<TorusGraph> {
    TorusGraph::new(params)
}

impl TorusGraph {
    pub fn new(params: TorusParams) -> Result<Self> {
        let TorusParams { n, m, r } = params;
        if n == 1 {
            return Err(Error::DegenerateInstance(
                "a single row turns vertical edges into loops or parallel edges".into(),
            ));
        }
        let idx = |i: usize, j: usize| i * m + j;
        // (tail, head, kind) with the board orientation
        let mut oriented = Vec::with_capacity(2 * n * m);
        for i in 0..n {
            for j in 0..m {
                oriented.push((idx(i, j), idx(i, (j + 1) % m), EdgeKind::Horizontal));
                if i + 1 < n {
                    oriented.push((idx(i, j), idx(i + 1, j), EdgeKind::Vertical));
                }
            }
        }
        for j in 0..m {
            oriented.push((idx(n - 1, (m - r + j) % m), idx(0, j), EdgeKind::Vertical));
        }

        let graph = Graph::from_edges(n * m, oriented.iter().map(|&(a, b, _)| (a, b)))
            .map_err(|(a, b)| {
                if a == b {
                    Error::DegenerateInstance("loop".into())
                } else if a / m == b / m {
                    Error::DegenerateInstance("parallel horizontal edges".into())
                } else {
                    Error::DegenerateInstance("parallel vertical edges".into())
                }
            })?;

        let mut info = vec![
            EdgeInfo {
                kind: EdgeKind::Horizontal,
                tail: 0,
                head: 0
            };
            graph.size()
        ];
        for &(tail, head, kind) in &oriented {
            let id = graph.edge_between(tail, head).expect("edge just inserted");
            info[id] = EdgeInfo { kind, tail, head };
        }
        Ok(Self {
            params,
            graph,
            info,
        })
    }

    pub fn params(&self) -> TorusParams {
        self.params
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rows(&self) -> usize {
        self.params.n
    }

    pub fn cols(&self) -> usize {
        self.params.m
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn vertex(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.params.n && j < self.params.m);
        i * self.params.m + j
    }

    /// Vertex index with both coordinates reduced mod the row and column
    /// counts (no torsion is applied when wrapping rows).
    pub fn vertex_mod(&self, i: i64, j: i64) -> usize {
        let n = self.params.n as i64;
        let m = self.params.m as i64;
        self.vertex(i.rem_euclid(n) as usize, j.rem_euclid(m) as usize)
    }

    pub fn coords(&self, v: usize) -> VertexId {
        VertexId {
            i: v / self.params.m,
            j: v % self.params.m,
        }
    }

    pub fn edge_info(&self, e: EdgeId) -> EdgeInfo {
        self.info[e]
    }

    pub fn edge_kind(&self, e: EdgeId) -> EdgeKind {
        self.info[e].kind
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<EdgeId> {
        self.graph.edge_between(a, b)
    }

    /// Image of `v` under the translation one row down. Row `n-1` wraps to
    /// row 0 shifted right by `r`, which makes this a graph automorphism.
    pub fn shift_down(&self, v: usize) -> usize {
        let VertexId { i, j } = self.coords(v);
        if i + 1 < self.params.n {
            self.vertex(i + 1, j)
        } else {
            self.vertex(0, (j + self.params.r) % self.params.m)
        }
    }

    /// Image of `v` under the translation one column right (an automorphism).
    pub fn shift_right(&self, v: usize) -> usize {
        let VertexId { i, j } = self.coords(v);
        self.vertex(i, (j + 1) % self.params.m)
    }

    /// Applies `rows` downward and `cols` rightward translations.
    pub fn translate(&self, v: usize, rows: usize, cols: usize) -> usize {
        let mut w = v;
        for _ in 0..rows {
            w = self.shift_down(w);
        }
        let VertexId { i, j } = self.coords(w);
        self.vertex(i, (j + cols) % self.params.m)
    }

    /// The I-cycle containing column `j`, and `j`'s position along it.
    pub fn column_position(&self, j: usize) -> (usize, usize) {
        let TorusParams { m, r, .. } = self.params;
        let g = self.params.g();
        let base = j % g;
        let mut col = base;
        let mut t = 0;
        while col != j {
            col = (col + r) % m;
            t += 1;
        }
        (base, t)
    }

    /// Columns of the I-cycle with index `base` in successor order.
    pub fn i_cycle_columns(&self, base: usize) -> Vec<usize> {
        let TorusParams { m, r, .. } = self.params;
        let len = m / self.params.g();
        (0..len).map(|t| (base + t * r) % m).collect()
    }

    /// The `gcd(r, m)` I-cycles as vertex sequences. Each walks its columns
    /// top to bottom in successor order `j -> j + r (mod m)`.
    pub fn i_cycles(&self) -> Vec<Vec<usize>> {
        (0..self.params.g())
            .map(|base| {
                self.i_cycle_columns(base)
                    .into_iter()
                    .flat_map(|j| (0..self.params.n).map(move |i| (i, j)))
                    .map(|(i, j)| self.vertex(i, j))
                    .collect()
            })
            .collect()
    }

    /// The `n` II-cycles (rows) as vertex sequences.
    pub fn ii_cycles(&self) -> Vec<Vec<usize>> {
        (0..self.params.n)
            .map(|i| (0..self.params.m).map(|j| self.vertex(i, j)).collect())
            .collect()
    }

    /// Edge ids of a closed vertex sequence.
    pub fn cycle_edges(&self, cycle: &[usize]) -> Vec<EdgeId> {
        (0..cycle.len())
            .map(|k| {
                let a = cycle[k];
                let b = cycle[(k + 1) % cycle.len()];
                self.edge_between(a, b).expect("consecutive cycle vertices adjacent")
            })
            .collect()
    }

    /// Places the vertices touched by `edges` in the plane so that every
    /// edge is a unit step right or down. Returns `None` when some cycle of
    /// the edge set winds around the torus, i.e. when the subgraph does not
    /// lift to the square grid.
    pub fn planar_lift(&self, edges: impl IntoIterator<Item = EdgeId>) -> Option<Vec<Option<(i64, i64)>>> {
        let mut adj: Vec<Vec<(usize, (i64, i64))>> = vec![Vec::new(); self.order()];
        for e in edges {
            let EdgeInfo { kind, tail, head } = self.info[e];
            let d = match kind {
                EdgeKind::Horizontal => (1, 0),
                EdgeKind::Vertical => (0, 1),
            };
            adj[tail].push((head, d));
            adj[head].push((tail, (-d.0, -d.1)));
        }
        let mut pos: Vec<Option<(i64, i64)>> = vec![None; self.order()];
        for start in 0..self.order() {
            if pos[start].is_some() || adj[start].is_empty() {
                continue;
            }
            pos[start] = Some((0, 0));
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let (x, y) = pos[v].unwrap();
                for &(w, (dx, dy)) in &adj[v] {
                    let want = (x + dx, y + dy);
                    match pos[w] {
                        None => {
                            pos[w] = Some(want);
                            stack.push(w);
                        }
                        Some(p) if p != want => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(pos)
    }

    /// Vertices of `set` as sorted coordinates, for reports.
    pub fn vertex_coords(&self, set: &VertexSet) -> Vec<VertexId> {
        set.ones().map(|v| self.coords(v)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus(n: usize, m: usize, r: usize) -> TorusGraph {
        build_torus(TorusParams::new(n, m, r).unwrap()).unwrap()
    }

    #[test]
    fn t384_is_four_regular() {
        let t = torus(3, 8, 4);
        assert_eq!(t.order(), 24);
        assert_eq!(t.graph().size(), 48);
        assert!((0..24).all(|v| t.graph().degree(v) == 4));
    }

    #[test]
    fn wrap_rule_matches_labelling() {
        let t = torus(4, 8, 2);
        let v05 = t.vertex(0, 5);
        let nbrs: Vec<usize> = t.graph().neighbors(v05).iter().map(|&(w, _)| w).collect();
        let mut want = vec![t.vertex(0, 4), t.vertex(0, 6), t.vertex(1, 5), t.vertex(3, 3)];
        want.sort_unstable();
        assert_eq!(nbrs, want);
    }

    #[test]
    fn degenerate_instances() {
        let p = |n, m, r| build_torus(TorusParams::new(n, m, r).unwrap());
        assert_eq!(
            p(2, 4, 4).unwrap_err(),
            Error::DegenerateInstance("parallel vertical edges".into())
        );
        assert!(matches!(p(1, 5, 2), Err(Error::DegenerateInstance(_))));
        assert!(matches!(p(3, 2, 1), Err(Error::DegenerateInstance(_))));
        assert!(p(2, 4, 3).is_ok());
        assert!(matches!(TorusParams::new(3, 4, 0), Err(Error::InvalidParams(_))));
        assert!(matches!(TorusParams::new(3, 4, 5), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn classification_examples() {
        let c = classify(TorusParams::new(4, 7, 5).unwrap()).unwrap();
        assert_eq!((c.class, c.n, c.m, c.r), (TorusClass::EoOdd, 2, 3, 3));
        let c = classify(TorusParams::new(3, 8, 4).unwrap()).unwrap();
        assert_eq!((c.class, c.n, c.m, c.r), (TorusClass::OeEven, 1, 4, 2));
        assert_eq!(
            classify(TorusParams::new(3, 7, 2).unwrap()),
            Err(Error::OddOrder { n: 3, m: 7, r: 2 })
        );
    }

    #[test]
    fn class_names_round_trip() {
        for c in TorusClass::ALL {
            assert_eq!(c.name().parse::<TorusClass>().unwrap(), c);
        }
    }

    #[test]
    fn i_cycles_examples() {
        let t = torus(3, 8, 4);
        let cyc = t.i_cycles();
        assert_eq!(cyc.len(), 4);
        assert!(cyc.iter().all(|c| c.len() == 6));

        let t = torus(3, 12, 8);
        let cyc = t.i_cycles();
        assert_eq!(cyc.len(), 4);
        assert!(cyc.iter().all(|c| c.len() == 9));

        let t = torus(4, 8, 2);
        assert_eq!(t.i_cycle_columns(0), vec![0, 2, 4, 6]);
        assert_eq!(t.i_cycle_columns(1), vec![1, 3, 5, 7]);
        assert!(t.i_cycles().iter().all(|c| c.len() == 16));
    }

    #[test]
    fn ii_cycles_examples() {
        for (n, m, r) in [(3, 8, 4), (4, 7, 5), (2, 6, 2)] {
            let t = torus(n, m, r);
            let rows = t.ii_cycles();
            assert_eq!(rows.len(), n);
            assert!(rows.iter().all(|c| c.len() == m));
        }
    }

    #[test]
    fn translations_are_automorphisms() {
        for (n, m, r) in [(3, 8, 4), (4, 7, 5), (2, 6, 1), (5, 6, 3)] {
            let t = torus(n, m, r);
            for &(a, b) in t.graph().edges() {
                assert!(t.graph().are_adjacent(t.shift_down(a), t.shift_down(b)));
                assert!(t.graph().are_adjacent(t.shift_right(a), t.shift_right(b)));
            }
        }
    }

    #[test]
    fn faces_lift_but_rows_do_not() {
        let t = torus(4, 6, 3);
        let face = [t.vertex(1, 1), t.vertex(1, 2), t.vertex(2, 2), t.vertex(2, 1)];
        assert!(t.planar_lift(t.cycle_edges(&face)).is_some());
        let row = &t.ii_cycles()[2];
        assert!(t.planar_lift(t.cycle_edges(row)).is_none());
        let icyc = &t.i_cycles()[0];
        assert!(t.planar_lift(t.cycle_edges(icyc)).is_none());
    }
}
