use fixedbitset::FixedBitSet;

use super::TorusGraph;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, VertexSet};

/// The subgraph induced by two "parallel" cycles of the torus together with
/// a spanning prism `C_L x P_2` inside it.
///
/// `rungs[p] = (a, b)` joins the two sides of the prism; consecutive rungs
/// (cyclically) bound the quadrilateral `quads[p] = [a_p, a_{p+1}, b_{p+1}, b_p]`.
#[derive(Debug, Clone)]
pub struct Band {
    pub vertices: VertexSet,
    pub edges: EdgeSet,
    pub rungs: Vec<(usize, usize)>,
    pub quads: Vec<[usize; 4]>,
}

impl Band {
    fn from_rungs(t: &TorusGraph, rungs: Vec<(usize, usize)>) -> Self {
        let mut vertices = FixedBitSet::with_capacity(t.order());
        for &(a, b) in &rungs {
            vertices.insert(a);
            vertices.insert(b);
        }
        let len = rungs.len();
        let quads = (0..len)
            .map(|p| {
                let (a0, b0) = rungs[p];
                let (a1, b1) = rungs[(p + 1) % len];
                [a0, a1, b1, b0]
            })
            .collect();
        let edges = t.graph().induced_edges(&vertices);
        Self {
            vertices,
            edges,
            rungs,
            quads,
        }
    }

    pub fn len(&self) -> usize {
        self.rungs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rungs.is_empty()
    }
}

impl TorusGraph {
    /// `R_{i,i+1}`: rows `i` and `i+1` (row `n-1` pairs with row 0 across the
    /// twisted seam). The prism runs along the row with vertical rungs.
    pub fn row_band(&self, i: usize) -> Result<Band> {
        let n = self.rows();
        if i >= n {
            return Err(Error::InvalidParams(format!("row {i} out of range")));
        }
        let rungs = (0..self.cols())
            .map(|j| {
                let a = self.vertex(i, j);
                (a, self.shift_down(a))
            })
            .collect();
        Ok(Band::from_rungs(self, rungs))
    }

    /// `C_{j,j+1}`: the I-cycles through columns `j` and `j+1`, for
    /// `j < gcd(r, m)`. The prism runs along the I-cycle of column `j` with
    /// horizontal rungs. With exactly two I-cycles both bands span the graph.
    pub fn col_band(&self, j: usize) -> Result<Band> {
        let g = self.params().g();
        if g < 2 {
            return Err(Error::BandUndefined(g));
        }
        if j >= g {
            return Err(Error::InvalidParams(format!(
                "band index {j} outside 0..{g}"
            )));
        }
        let rungs = self.i_cycles()[j]
            .iter()
            .map(|&a| (a, self.shift_right(a)))
            .collect();
        Ok(Band::from_rungs(self, rungs))
    }
}

#[cfg(test)]
mod tests {
    use crate::torus::{build_torus, TorusParams};

    fn check_prism(t: &crate::torus::TorusGraph, band: &super::Band) {
        let g = t.graph();
        for &(a, b) in &band.rungs {
            assert!(g.are_adjacent(a, b));
        }
        for q in &band.quads {
            for k in 0..4 {
                assert!(g.are_adjacent(q[k], q[(k + 1) % 4]), "{q:?}");
            }
        }
        assert_eq!(band.vertices.count_ones(..), 2 * band.len());
    }

    #[test]
    fn row_band_prism() {
        let t = build_torus(TorusParams::new(4, 7, 5).unwrap()).unwrap();
        let band = t.row_band(2).unwrap();
        assert_eq!(band.vertices.count_ones(..), 14);
        assert_eq!(band.quads.len(), 7);
        check_prism(&t, &band);
        check_prism(&t, &t.row_band(3).unwrap());
    }

    #[test]
    fn col_band_prism() {
        let t = build_torus(TorusParams::new(4, 8, 4).unwrap()).unwrap();
        let band = t.col_band(0).unwrap();
        assert_eq!(band.vertices.count_ones(..), 16);
        assert_eq!(band.len(), 8);
        check_prism(&t, &band);
        check_prism(&t, &t.col_band(3).unwrap());

        // two I-cycles: the band is the whole graph, a prism over C_20
        let t = build_torus(TorusParams::new(4, 10, 4).unwrap()).unwrap();
        let band = t.col_band(0).unwrap();
        assert_eq!(band.len(), 20);
        assert_eq!(band.vertices.count_ones(..), 40);
        check_prism(&t, &band);
    }

    #[test]
    fn col_band_needs_two_i_cycles() {
        let t = build_torus(TorusParams::new(4, 10, 3).unwrap()).unwrap();
        assert_eq!(t.col_band(0).unwrap_err(), crate::Error::BandUndefined(1));
    }
}
