//! The dual representation `T*` in which I-cycles become rows.

use serde::{Deserialize, Serialize};

use super::{build_torus, TorusGraph, TorusParams};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarParams {
    pub source: TorusParams,
    /// Smallest `k` in `0..m/g` with `r*k = g (mod m)`.
    pub k: usize,
    pub target: TorusParams,
}

pub fn star_params(params: TorusParams) -> StarParams {
    let TorusParams { n, m, r } = params;
    let g = params.g();
    let period = m / g;
    let k = (0..period)
        .find(|&k| (r * k) % m == g % m)
        .expect("r/g is invertible mod m/g");
    let cols = m * n / g;
    let torsion = ((period - k) * n + cols - 1) % cols + 1;
    StarParams {
        source: params,
        k,
        target: TorusParams {
            n: g,
            m: cols,
            r: torsion,
        },
    }
}

/// An explicit isomorphism `T(n,m,r) -> T*(n,m,r)` on linear vertex indices.
#[derive(Debug, Clone)]
pub struct StarMap {
    pub params: StarParams,
    pub forward: Vec<usize>,
    pub inverse: Vec<usize>,
}

impl StarMap {
    pub fn apply(&self, v: usize) -> usize {
        self.forward[v]
    }

    pub fn invert(&self, v: usize) -> usize {
        self.inverse[v]
    }
}

/// Vertex `v[i][j]` goes to row `g-1-(j mod g)`, column `t*n + i`, where `t`
/// is the rank of column `j` on its I-cycle walk from column `j mod g`.
///
/// Both graphs must be simple; a single I-cycle (`g = 1`) gives a one-row
/// target and is rejected.
pub fn star_map(params: TorusParams) -> Result<StarMap> {
    let sp = star_params(params);
    let source = build_torus(params)?;
    if sp.target.n < 2 {
        return Err(Error::DegenerateInstance(format!(
            "{} has a single I-cycle, so T* has one row",
            params
        )));
    }
    let target = build_torus(sp.target)?;
    Ok(build_map(&source, &target, sp))
}

fn build_map(source: &TorusGraph, target: &TorusGraph, sp: StarParams) -> StarMap {
    let TorusParams { n, m, .. } = sp.source;
    let g = sp.target.n;
    let mut forward = vec![0; n * m];
    let mut inverse = vec![0; n * m];
    for j in 0..m {
        let (base, t) = source.column_position(j);
        for i in 0..n {
            let v = source.vertex(i, j);
            let w = target.vertex(g - 1 - base, t * n + i);
            forward[v] = w;
            inverse[w] = v;
        }
    }
    StarMap {
        params: sp,
        forward,
        inverse,
    }
}

/// Result of checking a star map against both graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StarCheck {
    pub params: StarParams,
    /// The map is a bijection sending edges to edges, and edge counts agree.
    pub isomorphism: bool,
    /// Every edge changes between horizontal and vertical.
    pub kinds_swapped: bool,
    /// `T**` has the source parameters.
    pub involution: bool,
}

impl StarCheck {
    pub fn ok(&self) -> bool {
        self.isomorphism && self.kinds_swapped && self.involution
    }
}

pub fn check_star(params: TorusParams) -> Result<StarCheck> {
    let map = star_map(params)?;
    let source = build_torus(params)?;
    let target = build_torus(map.params.target)?;
    let bijective = map.forward.iter().enumerate().all(|(v, &w)| map.inverse[w] == v);
    let mut isomorphism = bijective && source.graph().size() == target.graph().size();
    let mut kinds_swapped = true;
    for (id, &(a, b)) in source.graph().edges().iter().enumerate() {
        match target.edge_between(map.apply(a), map.apply(b)) {
            Some(e) => kinds_swapped &= source.edge_kind(id) != target.edge_kind(e),
            None => isomorphism = false,
        }
    }
    Ok(StarCheck {
        params: map.params,
        isomorphism,
        kinds_swapped,
        involution: star_params(map.params.target).target == params,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, m: usize, r: usize) -> TorusParams {
        TorusParams::new(n, m, r).unwrap()
    }

    #[test]
    fn known_targets() {
        let sp = star_params(p(3, 12, 8));
        assert_eq!(sp.k, 2);
        assert_eq!(sp.target, p(4, 9, 3));

        let sp = star_params(p(4, 8, 4));
        assert_eq!((sp.k, sp.target), (1, p(4, 8, 4)));

        let sp = star_params(p(2, 4, 2));
        assert_eq!((sp.k, sp.target), (1, p(2, 4, 2)));
    }

    #[test]
    fn double_star_returns_source() {
        let q = p(4, 8, 2);
        assert_eq!(star_params(star_params(q).target).target, q);
    }

    #[test]
    fn torsion_stays_in_range() {
        // r = m gives k = 0 and torsion equal to the column count
        let sp = star_params(p(3, 4, 4));
        assert_eq!(sp.target, p(4, 3, 3));
    }

    #[test]
    fn map_preserves_edges_and_swaps_kinds() {
        let map = star_map(p(3, 12, 8)).unwrap();
        let s = build_torus(p(3, 12, 8)).unwrap();
        let t = build_torus(p(4, 9, 3)).unwrap();
        for (id, &(a, b)) in s.graph().edges().iter().enumerate() {
            let e = t
                .edge_between(map.apply(a), map.apply(b))
                .expect("image of an edge is an edge");
            assert_ne!(s.edge_kind(id), t.edge_kind(e));
        }
    }

    #[test]
    fn checks() {
        assert!(check_star(p(3, 12, 8)).unwrap().ok());
        assert!(check_star(p(6, 10, 4)).unwrap().ok());
    }

    #[test]
    fn single_i_cycle_is_rejected() {
        assert!(matches!(
            star_map(p(3, 5, 2)),
            Err(Error::DegenerateInstance(_))
        ));
    }
}
