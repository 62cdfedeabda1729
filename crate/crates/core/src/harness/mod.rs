//! Parameter sweeps, per-instance records and their CSV/JSON encodings.
//!
//! Records are produced in canonical `(n, m, r)` order whatever the thread
//! count. The `elapsed_ms` fields are the only nondeterministic output.

mod analyze;
mod verify;

pub use analyze::{analyze, load_instance, AnalyzeRecord, MatchingSource, WitnessRecord};
pub use verify::{explore_open, verify, CheckOutcome, VerifyRecord};

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forcing::Prediction;
use crate::torus::{TorusClass, TorusParams};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
    Open,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skip => "SKIP",
            Verdict::Open => "OPEN",
        })
    }
}

/// One CSV row: `n,m,r,class,predicted,F,f,pm_count,verdict,elapsed_ms`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceRow {
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub class: String,
    pub predicted: Option<Prediction>,
    #[serde(rename = "F")]
    pub max_forcing: Option<usize>,
    #[serde(rename = "f")]
    pub min_forcing: Option<usize>,
    pub pm_count: Option<usize>,
    pub verdict: Verdict,
    pub elapsed_ms: u64,
}

/// Instance selection for a sweep: every `(n, m, r)` with `n` in `rows`,
/// `m` in `cols`, `1 <= r <= m` (restricted to `torsions` when given),
/// `n*m <= max_vertices`, in a class from `classes`. Odd-order instances
/// have no perfect matching and are never selected.
#[derive(Debug, Clone, Serialize)]
pub struct SweepSpec {
    pub classes: Vec<TorusClass>,
    pub max_vertices: usize,
    pub rows: Option<Vec<usize>>,
    pub cols: Option<Vec<usize>>,
    pub torsions: Option<Vec<usize>>,
}

impl SweepSpec {
    pub fn classes(classes: impl IntoIterator<Item = TorusClass>, max_vertices: usize) -> Self {
        Self {
            classes: classes.into_iter().collect(),
            max_vertices,
            rows: None,
            cols: None,
            torsions: None,
        }
    }

    pub fn instances(&self) -> Vec<TorusParams> {
        let max = self.max_vertices;
        let pick = |list: &Option<Vec<usize>>, lo: usize, hi: usize| -> Vec<usize> {
            match list {
                Some(v) => v.iter().copied().filter(|&x| x >= lo && x <= hi).collect::<BTreeSet<_>>().into_iter().collect(),
                None => (lo..=hi).collect(),
            }
        };
        let mut out = Vec::new();
        for n in pick(&self.rows, 1, max / 2) {
            for m in pick(&self.cols, 2, max / n) {
                for r in pick(&self.torsions, 1, m) {
                    let Ok(p) = TorusParams::new(n, m, r) else { continue };
                    let Ok(tag) = crate::torus::classify(p) else { continue };
                    if self.classes.contains(&tag.class) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }
}

/// Parses `3`, `2,4,6`, `2..8` (inclusive) or any comma-separated mix.
pub fn parse_list(spec: &str) -> Result<Vec<usize>> {
    let mut out = BTreeSet::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let bad = || Error::InvalidParams(format!("bad range `{part}`"));
        if let Some((a, b)) = part.split_once("..") {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().parse().map_err(|_| bad())?;
            out.extend(a..=b);
        } else {
            out.insert(part.parse().map_err(|_| bad())?);
        }
    }
    Ok(out.into_iter().collect())
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub open: usize,
}

impl Tally {
    pub fn of<'a>(rows: impl IntoIterator<Item = &'a InstanceRow>) -> Self {
        let mut t = Tally::default();
        for row in rows {
            match row.verdict {
                Verdict::Pass => t.pass += 1,
                Verdict::Fail => t.fail += 1,
                Verdict::Skip => t.skip += 1,
                Verdict::Open => t.open += 1,
            }
        }
        t
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub tool_version: &'static str,
    pub command: String,
    pub sweep: SweepSpec,
    pub vertex_budget: usize,
    pub threads: usize,
    pub tally: Tally,
    pub records: Vec<VerifyRecord>,
    pub elapsed_ms: u64,
}

impl RunManifest {
    pub fn has_failures(&self) -> bool {
        self.tally.fail > 0
    }
}

pub fn rows_to_csv<'a>(rows: impl IntoIterator<Item = &'a InstanceRow>) -> Result<String> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(["n", "m", "r", "class", "predicted", "F", "f", "pm_count", "verdict", "elapsed_ms"])
        .map_err(|e| Error::InvalidParams(e.to_string()))?;
    for row in rows {
        w.serialize(row).map_err(|e| Error::InvalidParams(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::InvalidParams(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub(crate) fn millis(start: std::time::Instant) -> u64 {
    start.elapsed().as_millis() as u64
}
