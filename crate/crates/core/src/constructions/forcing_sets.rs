//! The matching `M1` and explicit forcing sets of the size the closed forms
//! predict.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::families::{family_edges, EdgeFamily};
use crate::error::{Error, Result};
use crate::forcing::forcing_number;
use crate::graph::EdgeId;
use crate::matching::PerfectMatching;
use crate::torus::{classify, TorusClass, TorusGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum M1Variant {
    /// All vertical pairs `v[2k][j] v[2k+1][j]`; needs an even row count.
    Vertical,
    /// Horizontal pairs `v[i][2k] v[i][2k+1]`; needs an even column count.
    Horizontal,
}

/// The variant used for the lower-bound construction of each solved
/// even-row class.
pub fn default_m1_variant(t: &TorusGraph) -> Result<M1Variant> {
    match classify(t.params())?.class {
        TorusClass::EoEven | TorusClass::EoOdd | TorusClass::EeOdd => Ok(M1Variant::Vertical),
        TorusClass::EeEven => Ok(M1Variant::Horizontal),
        c => Err(Error::WrongClass(format!("no M1 construction for class {c}"))),
    }
}

pub fn construct_m1(t: &TorusGraph, variant: M1Variant) -> Result<PerfectMatching> {
    let edges: Vec<EdgeId> = match variant {
        M1Variant::Vertical => {
            let mut all = Vec::new();
            for j in 0..t.cols() {
                all.extend(family_edges(t, EdgeFamily::W(j))?);
            }
            all
        }
        M1Variant::Horizontal => {
            if !t.cols().is_multiple_of(2) {
                return Err(Error::WrongClass(format!(
                    "horizontal M1 needs an even column count, got {}",
                    t.params()
                )));
            }
            let mut all = Vec::new();
            for j in (0..t.cols()).step_by(2) {
                all.extend(family_edges(t, EdgeFamily::E(j))?);
            }
            all
        }
    };
    PerfectMatching::from_edges(t.graph(), edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ForcingSetSource {
    /// `W_0 + W1_1 + W2_2 + ... + W1_{2m-1} + W2_{2m}` on `T(2n, 2m+1, r)`.
    OddColumns,
    /// `W2_0 + W1_1 + ... + W2_{2m-2} + W1_{2m-1}` on `T(2n, 2m, 2r-1)`.
    OddTorsion,
    /// Alternate rungs of each column band of `T(2n, 2m, 2r)`, `gcd(r,m) > 1`.
    Striped,
    /// Exact solver witness; used for `T(2n, 2m, 2r)` with `gcd(r,m) = 1`.
    SolverWitness,
}

#[derive(Debug, Clone)]
pub struct ForcingSetConstruction {
    pub matching: PerfectMatching,
    pub edges: Vec<EdgeId>,
    /// The size the construction is meant to attain.
    pub claimed_size: usize,
    pub source: ForcingSetSource,
}

/// A forcing set of `M1` (with the class's default variant).
pub fn construct_forcing_set(t: &TorusGraph) -> Result<ForcingSetConstruction> {
    let tag = classify(t.params())?;
    let (n, m) = (tag.n, tag.m);
    let matching = construct_m1(t, default_m1_variant(t)?)?;
    let (mut edges, claimed_size, source) = match tag.class {
        TorusClass::EoEven | TorusClass::EoOdd => {
            let mut edges = family_edges(t, EdgeFamily::W(0))?;
            for j in 1..t.cols() {
                let fam = if j % 2 == 1 { EdgeFamily::W1(j) } else { EdgeFamily::W2(j) };
                edges.extend(family_edges(t, fam)?);
            }
            (edges, (m + 1) * n, ForcingSetSource::OddColumns)
        }
        TorusClass::EeOdd => {
            let mut edges = Vec::new();
            for j in 0..t.cols() {
                let fam = if j % 2 == 0 { EdgeFamily::W2(j) } else { EdgeFamily::W1(j) };
                edges.extend(family_edges(t, fam)?);
            }
            (edges, m * n, ForcingSetSource::OddTorsion)
        }
        TorusClass::EeEven if tag.r.gcd(&m) > 1 => {
            (striped(t), m * n, ForcingSetSource::Striped)
        }
        TorusClass::EeEven => {
            let w = forcing_number(t.graph(), &matching)?;
            (w.witness_set, m * n + 1, ForcingSetSource::SolverWitness)
        }
        c => return Err(Error::WrongClass(format!("no forcing-set construction for class {c}"))),
    };
    edges.sort_unstable();
    Ok(ForcingSetConstruction {
        matching,
        edges,
        claimed_size,
        source,
    })
}

/// Band `b` is spanned by the I-cycles through columns `2b` and `2b+1`; its
/// rungs are the horizontal `M1` edges `v[i][c] v[i][c+1]`, listed along the
/// walk of column `2b`. Even bands keep the rungs at even walk positions, odd
/// bands those at odd positions, so every row meets a kept rung as soon as
/// there are two bands.
fn striped(t: &TorusGraph) -> Vec<EdgeId> {
    let bands = t.params().g() / 2;
    let mut edges = Vec::new();
    for b in 0..bands {
        let walk = t.i_cycle_columns(2 * b);
        let rungs = walk.iter().flat_map(|&c| {
            (0..t.rows()).map(move |i| (i, c))
        });
        for (pos, (i, c)) in rungs.enumerate() {
            if pos % 2 == b % 2 {
                let e = t
                    .edge_between(t.vertex(i, c), t.vertex(i, c + 1))
                    .expect("rung");
                edges.push(e);
            }
        }
    }
    edges
}
