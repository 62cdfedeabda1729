use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{forcing_number, ForcingWitness};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::enumerate_matchings;

pub const DEFAULT_VERTEX_BUDGET: usize = 36;

/// Forcing numbers over all perfect matchings of a graph.
#[derive(Debug, Clone)]
pub struct SpectrumResult {
    pub pm_count: usize,
    /// `f(G)`
    pub min_value: usize,
    /// `F(G)`
    pub max_value: usize,
    /// forcing number -> number of perfect matchings attaining it
    pub histogram: BTreeMap<usize, usize>,
    /// First matching in enumeration order attaining `max_value`.
    pub max_witness: ForcingWitness,
    /// First matching in enumeration order attaining `min_value`.
    pub min_witness: ForcingWitness,
}

/// Exhaustive `f(G)` and `F(G)`. Matchings are solved in parallel on the
/// current rayon pool; the result does not depend on the schedule.
pub fn max_forcing_number(graph: &Graph, vertex_budget: usize) -> Result<SpectrumResult> {
    if graph.order() > vertex_budget {
        return Err(Error::BudgetExceeded {
            vertices: graph.order(),
            budget: vertex_budget,
        });
    }
    let matchings: Vec<_> = enumerate_matchings(graph).collect();
    if matchings.is_empty() {
        return Err(Error::NoPerfectMatching);
    }
    let values: Vec<usize> = matchings
        .par_iter()
        .map(|m| forcing_number(graph, m).map(|w| w.value))
        .collect::<Result<_>>()?;

    let mut histogram = BTreeMap::new();
    for &v in &values {
        *histogram.entry(v).or_insert(0) += 1;
    }
    let max_value = *values.iter().max().unwrap();
    let min_value = *values.iter().min().unwrap();
    let first = |target: usize| values.iter().position(|&v| v == target).unwrap();
    let max_witness = forcing_number(graph, &matchings[first(max_value)])?;
    let min_witness = forcing_number(graph, &matchings[first(min_value)])?;
    Ok(SpectrumResult {
        pm_count: matchings.len(),
        min_value,
        max_value,
        histogram,
        max_witness,
        min_witness,
    })
}
