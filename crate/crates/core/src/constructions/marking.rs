//! Marked vertices, the subgraphs they induce, and the bound
//! `f(G, M) <= |M| - |T|` when that subgraph has no `M`-alternating cycle.

use serde::{Deserialize, Serialize};

use super::families::{family_vertices, VertexFamily};
use crate::error::{Error, Result};
use crate::forcing::check_matching;
use crate::graph::{EdgeId, EdgeSet, VertexSet};
use crate::matching::{find_alternating_cycle_in, AlternatingCycle, PerfectMatching};
use crate::torus::{classify, TorusClass, TorusGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MarkingStrategy {
    /// `X'_1 + X'_3 + ... + X'_{2n-3} + X*` on `T(2n, 2m+1, r)`.
    OddColumns,
    /// Odd rows alternate `Y_{4k+1}` and `X_{4k+3}` (even row and column counts).
    AlternatingRows,
    /// `Y* + X* + X'_2 + ... + X'_{2n-2}` on `T(2n, 2m, 2r)`.
    CoprimeTwist,
    /// `Y* + X'_0 + X'_2 + ... + X'_{2n-2}` on `T(2n, 2m, 2r-1)`.
    OddTorsionTwist,
}

impl MarkingStrategy {
    pub fn name(self) -> &'static str {
        match self {
            MarkingStrategy::OddColumns => "odd-columns",
            MarkingStrategy::AlternatingRows => "alternating-rows",
            MarkingStrategy::CoprimeTwist => "coprime-twist",
            MarkingStrategy::OddTorsionTwist => "odd-torsion-twist",
        }
    }

    /// Whether the strategy assumes the last row alternates with
    /// `v[N-1][2j] v[N-1][2j+1]` matched.
    fn needs_alternating_last_row(self) -> bool {
        matches!(self, MarkingStrategy::CoprimeTwist | MarkingStrategy::OddTorsionTwist)
    }
}

/// A translate of a base marking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Shift {
    pub rows: usize,
    pub cols: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedSet {
    /// Sorted vertex indices.
    pub vertices: Vec<usize>,
    pub strategy: MarkingStrategy,
    pub shift: Shift,
}

impl MarkedSet {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

fn base_marking(t: &TorusGraph, strategy: MarkingStrategy) -> Result<Vec<usize>> {
    let class = classify(t.params())?.class;
    let rows = t.rows();
    let mut out = Vec::new();
    let need = |ok: bool| {
        if ok {
            Ok(())
        } else {
            Err(Error::WrongClass(format!(
                "{} marking does not apply to {} ({class})",
                strategy.name(),
                t.params()
            )))
        }
    };
    match strategy {
        MarkingStrategy::OddColumns => {
            need(matches!(class, TorusClass::EoEven | TorusClass::EoOdd))?;
            for i in (1..rows.saturating_sub(2)).step_by(2) {
                out.extend(family_vertices(t, VertexFamily::XPrimeOdd(i))?);
            }
            out.extend(family_vertices(t, VertexFamily::XStarOddCols)?);
        }
        MarkingStrategy::AlternatingRows => {
            need(rows.is_multiple_of(2) && t.cols().is_multiple_of(2))?;
            for i in (1..rows).step_by(2) {
                let fam = if i % 4 == 1 { VertexFamily::Y(i) } else { VertexFamily::X(i) };
                out.extend(family_vertices(t, fam)?);
            }
        }
        MarkingStrategy::CoprimeTwist => {
            need(class == TorusClass::EeEven)?;
            out.extend(family_vertices(t, VertexFamily::YStarCoprime)?);
            out.extend(family_vertices(t, VertexFamily::XStarCoprime)?);
            for i in (2..rows - 1).step_by(2) {
                out.extend(family_vertices(t, VertexFamily::XPrimeEven(i))?);
            }
        }
        MarkingStrategy::OddTorsionTwist => {
            need(class == TorusClass::EeOdd)?;
            out.extend(family_vertices(t, VertexFamily::YStarOddTorsion)?);
            for i in (0..rows - 1).step_by(2) {
                out.extend(family_vertices(t, VertexFamily::XPrimeEven(i))?);
            }
        }
    }
    Ok(out)
}

/// The base marking of `strategy` translated by `shift`. Strategies that rely
/// on an alternating last row return `NotApplicable` when the translate of
/// that row's pairs is not contained in `matching`.
pub fn construct_marking(
    t: &TorusGraph,
    matching: &PerfectMatching,
    strategy: MarkingStrategy,
    shift: Shift,
) -> Result<MarkedSet> {
    check_matching(t.graph(), matching)?;
    let base = base_marking(t, strategy)?;
    let mv = |v: usize| t.translate(v, shift.rows, shift.cols);
    if strategy.needs_alternating_last_row() {
        let last = t.rows() - 1;
        for j in (0..t.cols()).step_by(2) {
            let (a, b) = (mv(t.vertex(last, j)), mv(t.vertex(last, j + 1)));
            if matching.mate(a) != b {
                return Err(Error::NotApplicable(format!(
                    "{} needs the translated last row to alternate in phase",
                    strategy.name()
                )));
            }
        }
    }
    let mut vertices: Vec<usize> = base.into_iter().map(mv).collect();
    vertices.sort_unstable();
    Ok(MarkedSet {
        vertices,
        strategy,
        shift,
    })
}

#[derive(Debug, Clone)]
pub struct MarkedSubgraph {
    /// Edges of all 2-paths `a - w - b` between marked `a`, `b`.
    pub edges: EdgeSet,
    pub vertices: VertexSet,
    /// Whether the subgraph lifts to the plane, i.e. has no cycle winding
    /// around the torus.
    pub plane: bool,
}

impl MarkedSubgraph {
    pub fn edge_ids(&self) -> Vec<EdgeId> {
        self.edges.ones().collect()
    }
}

/// Union of the 2-paths joining pairs of marked vertices. The marked set must
/// be independent.
pub fn marked_subgraph(t: &TorusGraph, marked: &[usize]) -> Result<MarkedSubgraph> {
    let g = t.graph();
    let mut is_marked = VertexSet::with_capacity(g.order());
    for &v in marked {
        if v >= g.order() {
            return Err(Error::InvalidParams(format!("vertex {v} out of range")));
        }
        is_marked.insert(v);
    }
    for &v in marked {
        if let Some(&(w, _)) = g.neighbors(v).iter().find(|&&(w, _)| is_marked.contains(w)) {
            return Err(Error::NotIndependent(v.min(w), v.max(w)));
        }
    }
    let mut edges = EdgeSet::with_capacity(g.size());
    let mut vertices = VertexSet::with_capacity(g.order());
    for w in 0..g.order() {
        let hits: Vec<_> = g
            .neighbors(w)
            .iter()
            .filter(|&&(a, _)| is_marked.contains(a))
            .collect();
        if hits.len() >= 2 {
            vertices.insert(w);
            for &&(a, e) in &hits {
                edges.insert(e);
                vertices.insert(a);
            }
        }
    }
    let plane = t.planar_lift(edges.ones()).is_some();
    Ok(MarkedSubgraph {
        edges,
        vertices,
        plane,
    })
}

#[derive(Debug, Clone)]
pub enum MarkingBound {
    /// `f(G, M) <= bound`, witnessed by the forcing set `M - M_T`.
    Certified {
        bound: usize,
        forcing_set: Vec<EdgeId>,
    },
    /// The marked subgraph contains this `M`-alternating cycle.
    Inapplicable { cycle: AlternatingCycle },
}

pub fn marking_bound(
    t: &TorusGraph,
    matching: &PerfectMatching,
    marked: &[usize],
) -> Result<MarkingBound> {
    check_matching(t.graph(), matching)?;
    let sub = marked_subgraph(t, marked)?;
    if let Some(cycle) = find_alternating_cycle_in(t.graph(), Some(&sub.edges), matching, &[]) {
        return Ok(MarkingBound::Inapplicable { cycle });
    }
    let mut covered = EdgeSet::with_capacity(t.graph().size());
    for &v in marked {
        covered.insert(matching.mate_edge(v));
    }
    let forcing_set: Vec<EdgeId> = matching
        .edges()
        .iter()
        .copied()
        .filter(|&e| !covered.contains(e))
        .collect();
    Ok(MarkingBound::Certified {
        bound: forcing_set.len(),
        forcing_set,
    })
}
