use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use super::millis;
use crate::constructions::{construct_m1, M1Variant};
use crate::error::{Error, Result};
use crate::forcing::{forcing_number, max_forcing_number, predicted_max_forcing, ForcingWitness, Prediction};
use crate::matching::PerfectMatching;
use crate::torus::{classify, parse_edge_list, TorusGraph, TorusParams};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatchingSource {
    /// Every perfect matching; reports the spectrum and a maximizing witness.
    EnumerateAll,
    M1Vertical,
    M1Horizontal,
    /// Edge-list text (`e i1 j1 i2 j2 h|v` lines) naming the matched edges.
    FromFile(String),
}

impl MatchingSource {
    pub fn name(&self) -> &'static str {
        match self {
            MatchingSource::EnumerateAll => "enumerate-all",
            MatchingSource::M1Vertical => "M1-vertical",
            MatchingSource::M1Horizontal => "M1-horizontal",
            MatchingSource::FromFile(_) => "from-file",
        }
    }
}

/// Edge sets are written as edge-list lines so they can be fed back to
/// `from-file`.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessRecord {
    pub value: usize,
    pub matching: Vec<String>,
    pub forcing_set: Vec<String>,
    /// Vertex coordinates of pairwise disjoint alternating cycles.
    pub lower_bound_cycles: Vec<Vec<[usize; 2]>>,
    pub rounds: usize,
    pub constraints: usize,
}

impl WitnessRecord {
    fn new(t: &TorusGraph, w: &ForcingWitness) -> Self {
        let lines = |edges: &[usize]| edges.iter().map(|&e| t.edge_line(e)).collect();
        Self {
            value: w.value,
            matching: lines(w.matching.edges()),
            forcing_set: lines(&w.witness_set),
            lower_bound_cycles: w
                .lower_bound_cert
                .iter()
                .map(|c| c.vertices().iter().map(|&v| [t.coords(v).i, t.coords(v).j]).collect())
                .collect(),
            rounds: w.stats.rounds,
            constraints: w.stats.constraints,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeRecord {
    pub params: TorusParams,
    pub class: String,
    pub predicted: Prediction,
    pub matching_source: &'static str,
    pub computed_min: Option<usize>,
    pub computed_max: Option<usize>,
    pub pm_count: Option<usize>,
    pub histogram: Option<BTreeMap<usize, usize>>,
    pub witness: WitnessRecord,
    pub elapsed_ms: u64,
}

/// A torus from an edge-list file: the `p torus` header fixes the
/// parameters and the `e` lines must be exactly its edges.
pub fn load_instance(text: &str) -> Result<TorusGraph> {
    let parsed = parse_edge_list(text)?;
    let params = parsed
        .params
        .ok_or_else(|| Error::Parse { line: 1, msg: "missing `p torus n m r` header".into() })?;
    let t = TorusGraph::new(params)?;
    let mut ids = t.resolve_records(&parsed.edges)?;
    ids.sort_unstable();
    ids.dedup();
    if ids.len() != parsed.edges.len() || ids.len() != t.graph().size() {
        return Err(Error::InvalidParams(format!(
            "edge list does not match {params}: {} edges listed, {} expected",
            parsed.edges.len(),
            t.graph().size()
        )));
    }
    Ok(t)
}

pub fn analyze(t: &TorusGraph, source: &MatchingSource, vertex_budget: usize) -> Result<AnalyzeRecord> {
    let start = Instant::now();
    let p = t.params();
    let class = classify(p)?.class;
    let single = |pm: PerfectMatching| -> Result<ForcingWitness> { forcing_number(t.graph(), &pm) };
    let (witness, spectrum) = match source {
        MatchingSource::EnumerateAll => {
            let s = max_forcing_number(t.graph(), vertex_budget)?;
            (s.max_witness.clone(), Some(s))
        }
        MatchingSource::M1Vertical => (single(construct_m1(t, M1Variant::Vertical)?)?, None),
        MatchingSource::M1Horizontal => (single(construct_m1(t, M1Variant::Horizontal)?)?, None),
        MatchingSource::FromFile(text) => {
            let parsed = parse_edge_list(text)?;
            if let Some(q) = parsed.params {
                if q != p {
                    return Err(Error::InvalidParams(format!("matching file is for {q}, not {p}")));
                }
            }
            let ids = t.resolve_records(&parsed.edges)?;
            (single(PerfectMatching::from_edges(t.graph(), ids)?)?, None)
        }
    };
    Ok(AnalyzeRecord {
        params: p,
        class: class.name().into(),
        predicted: predicted_max_forcing(p)?,
        matching_source: source.name(),
        computed_min: spectrum.as_ref().map(|s| s.min_value),
        computed_max: spectrum.as_ref().map(|s| s.max_value),
        pm_count: spectrum.as_ref().map(|s| s.pm_count),
        histogram: spectrum.map(|s| s.histogram),
        witness: WitnessRecord::new(t, &witness),
        elapsed_ms: millis(start),
    })
}
