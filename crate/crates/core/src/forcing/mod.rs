//! Exact forcing numbers.
//!
//! A subset `S` of a perfect matching `M` forces `M` iff every `M`-alternating
//! cycle contains an edge of `S`. The forcing number `f(G, M)` is therefore a
//! minimum hitting set of the (possibly exponentially many) alternating
//! cycles, restricted to matched edges. It is computed by lazy constraint
//! generation: solve the hitting set over the cycles found so far, look for
//! an alternating cycle that misses the current optimum, and repeat until
//! there is none.

mod hitting_set;
mod predict;
mod spectrum;

pub use predict::{predicted_max_forcing, within_proven_range, Prediction};
pub use spectrum::{max_forcing_number, SpectrumResult, DEFAULT_VERTEX_BUDGET};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexSet};
use crate::matching::{
    alternating_four_cycles, find_alternating_cycle, AlternatingCycle, PerfectMatching,
};
use hitting_set::{mask_elements, minimum_hitting_set, Mask, MAX_UNIVERSE};

#[derive(Debug, Clone)]
pub struct ForcingWitness {
    pub matching: PerfectMatching,
    pub value: usize,
    /// A forcing set of size `value`, sorted edge ids.
    pub witness_set: Vec<EdgeId>,
    /// Pairwise vertex-disjoint alternating cycles; their number is a lower
    /// bound on `value`.
    pub lower_bound_cert: Vec<AlternatingCycle>,
    pub stats: SolveStats,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    /// Separation rounds, i.e. hitting-set solves.
    pub rounds: usize,
    /// Constraint cycles held when the solver stopped.
    pub constraints: usize,
}

pub(crate) fn check_matching(graph: &Graph, matching: &PerfectMatching) -> Result<()> {
    if matching.len() * 2 != graph.order() {
        return Err(Error::NotAMatching(format!(
            "{} edges cannot cover {} vertices",
            matching.len(),
            graph.order()
        )));
    }
    for &e in matching.edges() {
        if e >= graph.size() {
            return Err(Error::NotAMatching(format!("edge id {e} not in graph")));
        }
        let (a, b) = graph.edge(e);
        if matching.mate(a) != b {
            return Err(Error::NotAMatching(format!("edge id {e} inconsistent")));
        }
    }
    Ok(())
}

/// Exact `f(G, M)` with a minimum forcing set and a disjoint-cycle lower
/// bound certificate.
pub fn forcing_number(graph: &Graph, matching: &PerfectMatching) -> Result<ForcingWitness> {
    check_matching(graph, matching)?;
    if matching.len() > MAX_UNIVERSE {
        return Err(Error::TooLarge(format!(
            "{} matched edges (limit {MAX_UNIVERSE})",
            matching.len()
        )));
    }
    let to_mask = |cycle: &AlternatingCycle| -> Mask {
        cycle
            .matched_edges(matching)
            .into_iter()
            .map(|e| matching.index_of(e).expect("matched edge"))
            .fold(0, |acc, k| acc | (1 << k))
    };

    let mut constraints: Vec<Mask> = alternating_four_cycles(graph, matching)
        .iter()
        .map(to_mask)
        .collect();
    let mut floor = 0;
    let mut rounds = 0;
    let hitter = loop {
        rounds += 1;
        let hitter = minimum_hitting_set(&constraints, floor);
        let chosen: Vec<EdgeId> = mask_elements(hitter)
            .into_iter()
            .map(|k| matching.edges()[k])
            .collect();
        match find_alternating_cycle(graph, matching, &chosen) {
            None => break chosen,
            Some(cycle) => {
                constraints.push(to_mask(&cycle));
                floor = hitter.count_ones() as usize;
            }
        }
    };
    let lower_bound_cert = disjoint_cycle_lower_bound(graph, matching)?;
    debug_assert!(lower_bound_cert.len() <= hitter.len());
    Ok(ForcingWitness {
        matching: matching.clone(),
        value: hitter.len(),
        witness_set: hitter,
        lower_bound_cert,
        stats: SolveStats {
            rounds,
            constraints: constraints.len(),
        },
    })
}

/// A family of pairwise vertex-disjoint `M`-alternating cycles: alternating
/// quadrilaterals first (greedily, in canonical order), then whatever the
/// exact cycle search still finds in the remaining graph.
pub fn disjoint_cycle_lower_bound(
    graph: &Graph,
    matching: &PerfectMatching,
) -> Result<Vec<AlternatingCycle>> {
    check_matching(graph, matching)?;
    let mut used = VertexSet::with_capacity(graph.order());
    let mut family = Vec::new();
    for quad in alternating_four_cycles(graph, matching) {
        if quad.vertices().iter().all(|&v| !used.contains(v)) {
            quad.vertices().iter().for_each(|&v| used.insert(v));
            family.push(quad);
        }
    }
    while let Some(cycle) =
        crate::matching::find_alternating_cycle_avoiding(graph, matching, &used)
    {
        cycle.vertices().iter().for_each(|&v| used.insert(v));
        family.push(cycle);
    }
    Ok(family)
}
