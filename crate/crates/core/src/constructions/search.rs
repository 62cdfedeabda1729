use num_integer::Integer;
use serde::Serialize;

use super::marking::{construct_marking, marking_bound, MarkedSet, MarkingBound, MarkingStrategy, Shift};
use crate::error::{Error, Result};
use crate::forcing::check_matching;
use crate::graph::EdgeId;
use crate::matching::PerfectMatching;
use crate::torus::{classify, star_map, StarMap, TorusClass, TorusGraph};

/// A marking certifying `f(G, M) <= bound`.
#[derive(Debug, Clone, Serialize)]
pub struct MarkingCertificate {
    pub marked: MarkedSet,
    pub bound: usize,
    pub forcing_set: Vec<EdgeId>,
    /// Whether the marking was found on `T*` and pulled back.
    pub via_star: bool,
    /// Markings tried, including this one.
    pub attempts: usize,
}

/// Looks for a marking whose marked subgraph has no `M`-alternating cycle,
/// on `T(2n, 2m, r)`:
///
/// 1. alternating-rows markings over all row translates and column shifts 0, 1;
/// 2. the same on `T*` (when it has an even number of rows), mapped back;
/// 3. the class's twist marking over all translates whose last row alternates.
pub fn shift_marking_search(t: &TorusGraph, matching: &PerfectMatching) -> Result<MarkingCertificate> {
    check_matching(t.graph(), matching)?;
    let tag = classify(t.params())?;
    if !matches!(tag.class, TorusClass::EeEven | TorusClass::EeOdd) {
        return Err(Error::WrongClass(format!(
            "marking search needs even rows and columns, got {} ({})",
            t.params(),
            tag.class
        )));
    }
    let mut attempts = 0;

    let direct = translates(t, &[0, 1]);
    if let Some(c) = try_all(t, matching, MarkingStrategy::AlternatingRows, &direct, &mut attempts)? {
        return Ok(c);
    }

    if let Some((star, map)) = star_view(t) {
        let image = PerfectMatching::from_edges(
            star.graph(),
            matching.edges().iter().map(|&e| {
                let (a, b) = t.graph().edge(e);
                star.edge_between(map.apply(a), map.apply(b)).expect("isomorphism")
            }),
        )?;
        for shift in translates(&star, &[0, 1]) {
            attempts += 1;
            let mk = construct_marking(&star, &image, MarkingStrategy::AlternatingRows, shift)?;
            if let MarkingBound::Certified { .. } = marking_bound(&star, &image, &mk.vertices)? {
                let mut vertices: Vec<usize> = mk.vertices.iter().map(|&v| map.invert(v)).collect();
                vertices.sort_unstable();
                if let MarkingBound::Certified { bound, forcing_set } =
                    marking_bound(t, matching, &vertices)?
                {
                    return Ok(MarkingCertificate {
                        marked: MarkedSet { vertices, ..mk },
                        bound,
                        forcing_set,
                        via_star: true,
                        attempts,
                    });
                }
            }
        }
    }

    let twist = match tag.class {
        TorusClass::EeEven if tag.r.gcd(&tag.m) == 1 => Some(MarkingStrategy::CoprimeTwist),
        TorusClass::EeOdd => Some(MarkingStrategy::OddTorsionTwist),
        _ => None,
    };
    if let Some(strategy) = twist {
        let all_cols: Vec<usize> = (0..t.cols()).collect();
        if let Some(c) = try_all(t, matching, strategy, &translates(t, &all_cols), &mut attempts)? {
            return Ok(c);
        }
    }
    Err(Error::SearchExhausted(format!(
        "no certifying marking among {attempts} candidates on {}",
        t.params()
    )))
}

fn translates(t: &TorusGraph, cols: &[usize]) -> Vec<Shift> {
    (0..t.rows())
        .flat_map(|rows| cols.iter().map(move |&cols| Shift { rows, cols }))
        .collect()
}

fn try_all(
    t: &TorusGraph,
    matching: &PerfectMatching,
    strategy: MarkingStrategy,
    shifts: &[Shift],
    attempts: &mut usize,
) -> Result<Option<MarkingCertificate>> {
    for &shift in shifts {
        let marked = match construct_marking(t, matching, strategy, shift) {
            Ok(mk) => mk,
            Err(Error::NotApplicable(_)) => continue,
            Err(e) => return Err(e),
        };
        *attempts += 1;
        if let MarkingBound::Certified { bound, forcing_set } =
            marking_bound(t, matching, &marked.vertices)?
        {
            return Ok(Some(MarkingCertificate {
                marked,
                bound,
                forcing_set,
                via_star: false,
                attempts: *attempts,
            }));
        }
    }
    Ok(None)
}

fn star_view(t: &TorusGraph) -> Option<(TorusGraph, StarMap)> {
    let map = star_map(t.params()).ok()?;
    let target = map.params.target;
    if target.n % 2 != 0 || target.m % 2 != 0 {
        return None;
    }
    let star = TorusGraph::new(target).ok()?;
    Some((star, map))
}
