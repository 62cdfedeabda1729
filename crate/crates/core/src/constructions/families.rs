//! Named edge and vertex families on `T(N, M, R)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::EdgeId;
use crate::torus::{classify, TorusClass, TorusGraph};

/// Matched-edge families. `W`, `W1` and `W2` pair rows `2k, 2k+1` in a
/// column and need an even number of rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeFamily {
    /// `{v[2k][j] v[2k+1][j]}` for all `k`.
    W(usize),
    /// The pairs of `W(j)` starting at rows `4k+2`.
    W1(usize),
    /// The pairs of `W(j)` starting at rows `4k`.
    W2(usize),
    /// `{v[i][j] v[i][j+1]}` for all rows `i`.
    E(usize),
}

/// Marked-vertex families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexFamily {
    /// Even columns of row `i`: `v[i][2k]`.
    X(usize),
    /// Odd columns of row `i`: `v[i][2k+1]`.
    Y(usize),
    /// Row `i` at columns `2, 4, ..., M-1`, used with an odd column count.
    XPrimeOdd(usize),
    /// Row `i` at columns `2, 4, ..., M-2`, used with an even column count.
    XPrimeEven(usize),
    /// Last-row set for `T(2n, 2m+1, r)`: columns `2m+1-r` and
    /// `2m+1-r+j` for odd `j` in `3..2m`.
    XStarOddCols,
    /// Row 0 of `T(2n, 2m, 2r)` at odd columns other than `2r+1`.
    XStarCoprime,
    /// Column 0 of `T(2n, 2m, 2r)` at rows `3, 5, ..., 2n-1`.
    YStarCoprime,
    /// `T(2n, 2m, 2r-1)`: `v[2n-1][2m-2r+1]` and column 0 at rows
    /// `1, 3, ..., 2n-3`.
    YStarOddTorsion,
}

fn wrong(t: &TorusGraph, what: &str) -> Error {
    Error::WrongClass(format!("{what} is not defined on {}", t.params()))
}

fn check_row(t: &TorusGraph, i: usize) -> Result<()> {
    if i >= t.rows() {
        return Err(Error::InvalidParams(format!("row {i} out of range")));
    }
    Ok(())
}

fn check_col(t: &TorusGraph, j: usize) -> Result<()> {
    if j >= t.cols() {
        return Err(Error::InvalidParams(format!("column {j} out of range")));
    }
    Ok(())
}

fn vertical_pairs(t: &TorusGraph, j: usize, starts: impl Iterator<Item = usize>) -> Vec<EdgeId> {
    starts
        .map(|i| {
            t.edge_between(t.vertex(i, j), t.vertex(i + 1, j))
                .expect("vertical edge")
        })
        .collect()
}

pub fn family_edges(t: &TorusGraph, family: EdgeFamily) -> Result<Vec<EdgeId>> {
    let rows = t.rows();
    let mut edges = match family {
        EdgeFamily::W(j) | EdgeFamily::W1(j) | EdgeFamily::W2(j) => {
            check_col(t, j)?;
            if !rows.is_multiple_of(2) {
                return Err(wrong(t, "W-family"));
            }
            let step = if matches!(family, EdgeFamily::W(_)) { 2 } else { 4 };
            let first = if matches!(family, EdgeFamily::W1(_)) { 2 } else { 0 };
            vertical_pairs(t, j, (first..rows).step_by(step))
        }
        EdgeFamily::E(j) => {
            check_col(t, j)?;
            (0..rows)
                .map(|i| {
                    t.edge_between(t.vertex(i, j), t.vertex(i, (j + 1) % t.cols()))
                        .expect("horizontal edge")
                })
                .collect()
        }
    };
    edges.sort_unstable();
    Ok(edges)
}

pub fn family_vertices(t: &TorusGraph, family: VertexFamily) -> Result<Vec<usize>> {
    let (rows, cols) = (t.rows(), t.cols());
    let r = t.params().r;
    let class = classify(t.params()).ok().map(|c| c.class);
    let row = |i: usize, js: &mut dyn Iterator<Item = usize>| -> Vec<usize> {
        js.map(|j| t.vertex(i, j % cols)).collect()
    };
    let mut out = match family {
        VertexFamily::X(i) => {
            check_row(t, i)?;
            row(i, &mut (0..cols / 2).map(|k| 2 * k))
        }
        VertexFamily::Y(i) => {
            check_row(t, i)?;
            row(i, &mut (0..cols / 2).map(|k| 2 * k + 1))
        }
        VertexFamily::XPrimeOdd(i) => {
            check_row(t, i)?;
            if cols % 2 == 0 {
                return Err(wrong(t, "X' (odd columns)"));
            }
            row(i, &mut (1..=cols / 2).map(|k| 2 * k))
        }
        VertexFamily::XPrimeEven(i) => {
            check_row(t, i)?;
            if cols % 2 != 0 {
                return Err(wrong(t, "X' (even columns)"));
            }
            row(i, &mut (1..cols / 2).map(|k| 2 * k))
        }
        VertexFamily::XStarOddCols => {
            if !matches!(class, Some(TorusClass::EoEven | TorusClass::EoOdd)) {
                return Err(wrong(t, "X* (odd columns)"));
            }
            let base = cols + cols - r;
            let mut js = std::iter::once(base).chain((3..cols - 1).step_by(2).map(|j| base + j));
            row(rows - 1, &mut js)
        }
        VertexFamily::XStarCoprime => {
            if class != Some(TorusClass::EeEven) {
                return Err(wrong(t, "X* (coprime torsion)"));
            }
            let skip = r + 1;
            row(0, &mut (1..cols).step_by(2).filter(|&j| j != skip))
        }
        VertexFamily::YStarCoprime => {
            if class != Some(TorusClass::EeEven) {
                return Err(wrong(t, "Y* (coprime torsion)"));
            }
            (3..rows).step_by(2).map(|i| t.vertex(i, 0)).collect()
        }
        VertexFamily::YStarOddTorsion => {
            if class != Some(TorusClass::EeOdd) {
                return Err(wrong(t, "Y* (odd torsion)"));
            }
            // 2m - 2r' + 1 with R = 2r' - 1 equals M - R
            std::iter::once(t.vertex(rows - 1, cols - r))
                .chain((1..rows - 2).step_by(2).map(|i| t.vertex(i, 0)))
                .collect()
        }
    };
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus::TorusParams;

    fn torus(n: usize, m: usize, r: usize) -> TorusGraph {
        TorusGraph::new(TorusParams::new(n, m, r).unwrap()).unwrap()
    }

    fn coords(t: &TorusGraph, vs: &[usize]) -> Vec<(usize, usize)> {
        vs.iter().map(|&v| (t.coords(v).i, t.coords(v).j)).collect()
    }

    #[test]
    fn w_families_partition_w() {
        let t = torus(8, 5, 2);
        let mut split = family_edges(&t, EdgeFamily::W1(3)).unwrap();
        split.extend(family_edges(&t, EdgeFamily::W2(3)).unwrap());
        split.sort_unstable();
        assert_eq!(split, family_edges(&t, EdgeFamily::W(3)).unwrap());
        assert_eq!(family_edges(&t, EdgeFamily::W1(0)).unwrap().len(), 2);
        assert!(matches!(
            family_edges(&torus(3, 5, 2), EdgeFamily::W(0)),
            Err(Error::WrongClass(_))
        ));
        assert_eq!(family_edges(&torus(3, 5, 2), EdgeFamily::E(4)).unwrap().len(), 3);
    }

    #[test]
    fn star_sets() {
        let t = torus(4, 7, 5);
        // base column 7 - 5 = 2, then 2 + 3 and 2 + 5 = 0 (mod 7)
        assert_eq!(
            coords(&t, &family_vertices(&t, VertexFamily::XStarOddCols).unwrap()),
            vec![(3, 0), (3, 2), (3, 5)]
        );
        let t = torus(6, 8, 2);
        assert_eq!(
            coords(&t, &family_vertices(&t, VertexFamily::XStarCoprime).unwrap()),
            vec![(0, 1), (0, 5), (0, 7)]
        );
        assert_eq!(
            coords(&t, &family_vertices(&t, VertexFamily::YStarCoprime).unwrap()),
            vec![(3, 0), (5, 0)]
        );
        let t = torus(6, 8, 3);
        assert_eq!(
            coords(&t, &family_vertices(&t, VertexFamily::YStarOddTorsion).unwrap()),
            vec![(1, 0), (3, 0), (5, 5)]
        );
        assert!(matches!(
            family_vertices(&t, VertexFamily::XStarCoprime),
            Err(Error::WrongClass(_))
        ));
    }

    #[test]
    fn primed_rows() {
        let t = torus(4, 7, 1);
        assert_eq!(
            coords(&t, &family_vertices(&t, VertexFamily::XPrimeOdd(1)).unwrap()),
            vec![(1, 2), (1, 4), (1, 6)]
        );
        let t = torus(4, 8, 2);
        assert_eq!(
            coords(&t, &family_vertices(&t, VertexFamily::X(2)).unwrap()),
            vec![(2, 0), (2, 2), (2, 4), (2, 6)]
        );
        assert_eq!(
            coords(&t, &family_vertices(&t, VertexFamily::XPrimeEven(2)).unwrap()),
            vec![(2, 2), (2, 4), (2, 6)]
        );
        assert!(family_vertices(&t, VertexFamily::XPrimeOdd(0)).is_err());
    }
}
