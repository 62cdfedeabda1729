//! Fixed polyominoes on the square lattice.
//!
//! Cell `(x, y)` is the unit square with corners `(x, y)` and `(x+1, y+1)`;
//! `y` grows downwards, matching the lift in [`TorusGraph::planar_lift`].

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::torus::TorusGraph;

pub type Cell = (i64, i64);

const STEPS: [Cell; 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polyomino {
    cells: BTreeSet<Cell>,
}

impl Polyomino {
    /// Rejects empty and edge-disconnected cell sets.
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        let Some(&start) = cells.iter().next() else {
            return Err(Error::InvalidParams("empty polyomino".into()));
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some((x, y)) = queue.pop_front() {
            for (dx, dy) in STEPS {
                let c = (x + dx, y + dy);
                if cells.contains(&c) && seen.insert(c) {
                    queue.push_back(c);
                }
            }
        }
        if seen.len() != cells.len() {
            return Err(Error::InvalidParams("cells are not edge-connected".into()));
        }
        Ok(Self { cells })
    }

    pub fn rectangle(width: i64, height: i64) -> Result<Self> {
        Self::new((0..width).flat_map(|x| (0..height).map(move |y| (x, y))))
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    /// Translate so the minimum `x` and minimum `y` are both 0.
    pub fn normalized(&self) -> Self {
        let min_x = self.cells.iter().map(|c| c.0).min().unwrap_or(0);
        let min_y = self.cells.iter().map(|c| c.1).min().unwrap_or(0);
        Self {
            cells: self.cells.iter().map(|&(x, y)| (x - min_x, y - min_y)).collect(),
        }
    }

    /// Replace every cell by a 2x2 block.
    pub fn inflate(&self) -> Self {
        let cells = self
            .cells
            .iter()
            .flat_map(|&(x, y)| {
                [(0, 0), (1, 0), (0, 1), (1, 1)].map(|(dx, dy)| (2 * x + dx, 2 * y + dy))
            })
            .collect();
        Self { cells }
    }

    /// Lattice points with all four surrounding cells present.
    pub fn interior_vertex_count(&self) -> usize {
        self.vertices()
            .into_iter()
            .filter(|&(x, y)| {
                [(x - 1, y - 1), (x, y - 1), (x - 1, y), (x, y)]
                    .iter()
                    .all(|c| self.cells.contains(c))
            })
            .count()
    }

    /// Corners of all cells.
    pub fn vertices(&self) -> BTreeSet<Cell> {
        self.cells
            .iter()
            .flat_map(|&(x, y)| [(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)])
            .collect()
    }

    /// Endpoints of the unit edges lying on exactly one cell.
    pub fn boundary_vertices(&self) -> BTreeSet<Cell> {
        let mut count: BTreeMap<(Cell, Cell), u8> = BTreeMap::new();
        for &(x, y) in &self.cells {
            for e in [
                ((x, y), (x + 1, y)),
                ((x, y + 1), (x + 1, y + 1)),
                ((x, y), (x, y + 1)),
                ((x + 1, y), (x + 1, y + 1)),
            ] {
                *count.entry(e).or_insert(0) += 1;
            }
        }
        count
            .into_iter()
            .filter(|&(_, k)| k == 1)
            .flat_map(|((a, b), _)| [a, b])
            .collect()
    }

    /// No empty cell is enclosed by the polyomino.
    pub fn is_simply_connected(&self) -> bool {
        let min_x = self.cells.iter().map(|c| c.0).min().unwrap() - 1;
        let max_x = self.cells.iter().map(|c| c.0).max().unwrap() + 1;
        let min_y = self.cells.iter().map(|c| c.1).min().unwrap() - 1;
        let max_y = self.cells.iter().map(|c| c.1).max().unwrap() + 1;
        let inside = |(x, y): Cell| (min_x..=max_x).contains(&x) && (min_y..=max_y).contains(&y);
        let mut outside = BTreeSet::from([(min_x, min_y)]);
        let mut queue = VecDeque::from([(min_x, min_y)]);
        while let Some((x, y)) = queue.pop_front() {
            for (dx, dy) in STEPS {
                let c = (x + dx, y + dy);
                if inside(c) && !self.cells.contains(&c) && outside.insert(c) {
                    queue.push_back(c);
                }
            }
        }
        let area = ((max_x - min_x + 1) * (max_y - min_y + 1)) as usize;
        outside.len() + self.cells.len() == area
    }

    /// Whether the boundary of this region could be an alternating cycle:
    /// `false` when the interior vertex count is odd (an odd number of
    /// interior vertices cannot be perfectly matched among themselves),
    /// `true` when the parity gives no obstruction.
    pub fn boundary_alternating_possible(&self) -> Result<bool> {
        if !self.is_simply_connected() {
            return Err(Error::NotSimplyConnected);
        }
        Ok(self.interior_vertex_count().is_multiple_of(2))
    }

    /// One `c x y` line per cell, sorted.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (x, y) in &self.cells {
            writeln!(out, "c {x} {y}").unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut cells = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |msg: &str| Error::Parse {
                line: idx + 1,
                msg: msg.to_string(),
            };
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 || parts[0] != "c" {
                return Err(parse_err("expected `c <x> <y>`"));
            }
            let x = parts[1].parse().map_err(|_| parse_err("bad x"))?;
            let y = parts[2].parse().map_err(|_| parse_err("bad y"))?;
            cells.push((x, y));
        }
        Self::new(cells)
    }
}

/// All fixed polyominoes with `1..=max_cells` cells, normalized and sorted,
/// grouped by size. Each size is grown from the previous one by adding a
/// neighbouring cell and deduplicating the normalized results.
pub fn enumerate_fixed(max_cells: usize) -> Vec<Vec<Polyomino>> {
    let mut levels: Vec<Vec<Polyomino>> = Vec::new();
    if max_cells == 0 {
        return levels;
    }
    levels.push(vec![Polyomino::new([(0, 0)]).unwrap()]);
    while levels.len() < max_cells {
        let mut next = BTreeSet::new();
        for p in levels.last().unwrap() {
            for &(x, y) in &p.cells {
                for (dx, dy) in STEPS {
                    let c = (x + dx, y + dy);
                    if !p.cells.contains(&c) {
                        let mut cells = p.cells.clone();
                        cells.insert(c);
                        next.insert(Polyomino { cells }.normalized());
                    }
                }
            }
        }
        levels.push(next.into_iter().collect());
    }
    levels
}

/// The region `Int[C]` enclosed by a cycle of a torus, given as a closed
/// vertex sequence. The cycle must lift to a simple closed lattice path.
pub fn interior_of_cycle(t: &TorusGraph, cycle: &[usize]) -> Result<Polyomino> {
    let edges = t.cycle_edges(cycle);
    let lift = t.planar_lift(edges).ok_or(Error::NotSimplyConnected)?;
    let points: Vec<Cell> = cycle.iter().map(|&v| lift[v].expect("lifted")).collect();
    if points.iter().collect::<BTreeSet<_>>().len() != points.len() {
        return Err(Error::NotSimplyConnected);
    }
    let min_x = points.iter().map(|p| p.0).min().unwrap();
    let max_x = points.iter().map(|p| p.0).max().unwrap();
    let min_y = points.iter().map(|p| p.1).min().unwrap();
    let max_y = points.iter().map(|p| p.1).max().unwrap();
    let mut cells = Vec::new();
    for x in min_x..max_x {
        for y in min_y..max_y {
            // a ray from the cell centre towards +x crosses vertical steps
            let crossings = (0..points.len())
                .filter(|&k| {
                    let (a, b) = (points[k], points[(k + 1) % points.len()]);
                    a.0 == b.0 && a.0 > x && a.1.min(b.1) == y
                })
                .count();
            if crossings % 2 == 1 {
                cells.push((x, y));
            }
        }
    }
    Polyomino::new(cells).map_err(|_| Error::NotSimplyConnected)
}
