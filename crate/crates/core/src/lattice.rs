//! Grid geometries and the canonical cell ↔ variable-index bijection.
//!
//! Four lattices are supported. Cells carry integer coordinates:
//!
//! * `Square2D` — `(x, y)` with `0 ≤ x, y < m`,
//! * `Triangular` — level coordinates `(x, y)` with `0 ≤ x ≤ y < m`;
//!   level `y` holds `y + 1` points, level 0 is the apex,
//! * `HexWindow` — `(x, y)` with `0 ≤ x < 2m`, `0 ≤ y < m` and
//!   `x ≡ y (mod 2)`; each row holds exactly `m` valid points,
//! * `Cubic` — `(x, y, z)` with each coordinate in `[0, m)`.
//!
//! Indices are 1-based so that a [`CellIndex`] doubles as a DIMACS variable
//! number.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LatticeKind {
    Square2D,
    Triangular,
    HexWindow,
    Cubic,
}

impl LatticeKind {
    /// Short name used in file headers and CLI flags.
    pub fn name(self) -> &'static str {
        match self {
            LatticeKind::Square2D => "square",
            LatticeKind::Triangular => "tri",
            LatticeKind::HexWindow => "hex",
            LatticeKind::Cubic => "cube",
        }
    }

    pub fn parse(s: &str) -> Option<LatticeKind> {
        match s {
            "square" => Some(LatticeKind::Square2D),
            "tri" => Some(LatticeKind::Triangular),
            "hex" => Some(LatticeKind::HexWindow),
            "cube" => Some(LatticeKind::Cubic),
            _ => None,
        }
    }
}

/// A lattice point. `z` is zero everywhere except on cubic grids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
    pub z: i32,
}

impl Cell {
    pub const fn xy(x: i32, y: i32) -> Cell {
        Cell { x, y, z: 0 }
    }

    pub const fn xyz(x: i32, y: i32, z: i32) -> Cell {
        Cell { x, y, z }
    }
}

/// 1-based cell index; identical to the DIMACS variable number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellIndex(pub u32);

impl CellIndex {
    pub fn get(self) -> u32 {
        self.0
    }

    /// Signed DIMACS literal for this variable.
    pub fn lit(self, positive: bool) -> i32 {
        if positive {
            self.0 as i32
        } else {
            -(self.0 as i32)
        }
    }
}

/// A lattice kind together with its edge parameter `m` (the cube grid uses
/// `m` for the paper's `n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridSpec {
    pub kind: LatticeKind,
    pub m: u32,
}

impl GridSpec {
    pub fn new(kind: LatticeKind, m: u32) -> Result<GridSpec> {
        if m == 0 {
            return Err(Error::EmptyGrid);
        }
        Ok(GridSpec { kind, m })
    }

    pub fn square(m: u32) -> GridSpec {
        GridSpec { kind: LatticeKind::Square2D, m }
    }

    pub fn triangular(m: u32) -> GridSpec {
        GridSpec { kind: LatticeKind::Triangular, m }
    }

    pub fn hex_window(m: u32) -> GridSpec {
        GridSpec { kind: LatticeKind::HexWindow, m }
    }

    pub fn cubic(m: u32) -> GridSpec {
        GridSpec { kind: LatticeKind::Cubic, m }
    }

    /// Number of cells: `m²` (square, hex window), `m(m+1)/2` (triangular)
    /// or `m³` (cubic).
    pub fn cell_count(&self) -> usize {
        let m = self.m as usize;
        match self.kind {
            LatticeKind::Square2D | LatticeKind::HexWindow => m * m,
            LatticeKind::Triangular => m * (m + 1) / 2,
            LatticeKind::Cubic => m * m * m,
        }
    }

    /// True iff the coordinates satisfy the kind's validity predicate.
    pub fn contains(&self, c: Cell) -> bool {
        let m = self.m as i32;
        match self.kind {
            LatticeKind::Square2D => {
                c.z == 0 && 0 <= c.x && c.x < m && 0 <= c.y && c.y < m
            }
            LatticeKind::Triangular => c.z == 0 && 0 <= c.x && c.x <= c.y && c.y < m,
            LatticeKind::HexWindow => {
                c.z == 0
                    && 0 <= c.x
                    && c.x < 2 * m
                    && 0 <= c.y
                    && c.y < m
                    && (c.x - c.y) % 2 == 0
            }
            LatticeKind::Cubic => {
                (0..m).contains(&c.x) && (0..m).contains(&c.y) && (0..m).contains(&c.z)
            }
        }
    }

    /// All cells in canonical (index) order.
    pub fn cells(&self) -> Vec<Cell> {
        let m = self.m as i32;
        let mut out = Vec::with_capacity(self.cell_count());
        match self.kind {
            LatticeKind::Square2D => {
                for y in 0..m {
                    for x in 0..m {
                        out.push(Cell::xy(x, y));
                    }
                }
            }
            LatticeKind::Triangular => {
                for y in 0..m {
                    for x in 0..=y {
                        out.push(Cell::xy(x, y));
                    }
                }
            }
            LatticeKind::HexWindow => {
                for y in 0..m {
                    for t in 0..m {
                        out.push(Cell::xy((y % 2) + 2 * t, y));
                    }
                }
            }
            LatticeKind::Cubic => {
                for z in 0..m {
                    for y in 0..m {
                        for x in 0..m {
                            out.push(Cell::xyz(x, y, z));
                        }
                    }
                }
            }
        }
        out
    }

    /// Canonical 1-based index of a cell.
    pub fn index_of(&self, c: Cell) -> Result<CellIndex> {
        if !self.contains(c) {
            return Err(Error::InvalidCell { grid: *self, cell: c });
        }
        Ok(self.index_of_unchecked(c))
    }

    /// Like [`index_of`](Self::index_of) but assumes the cell is valid.
    pub fn index_of_unchecked(&self, c: Cell) -> CellIndex {
        let m = self.m as u32;
        let (x, y, z) = (c.x as u32, c.y as u32, c.z as u32);
        let idx = match self.kind {
            LatticeKind::Square2D => y * m + x + 1,
            LatticeKind::Triangular => y * (y + 1) / 2 + x + 1,
            LatticeKind::HexWindow => {
                let t = (x - (y % 2)) / 2;
                y * m + t + 1
            }
            LatticeKind::Cubic => z * m * m + y * m + x + 1,
        };
        CellIndex(idx)
    }

    /// Inverse of [`index_of`](Self::index_of).
    pub fn cell_of(&self, idx: CellIndex) -> Result<Cell> {
        let max = self.cell_count() as u32;
        if idx.0 < 1 || idx.0 > max {
            return Err(Error::IndexOutOfRange { idx: idx.0, max });
        }
        let i = idx.0 - 1;
        let m = self.m as u32;
        let cell = match self.kind {
            LatticeKind::Square2D => Cell::xy((i % m) as i32, (i / m) as i32),
            LatticeKind::Triangular => {
                // level y is the largest y with y(y+1)/2 <= i
                let mut y = ((((8 * i + 1) as f64).sqrt() as u32).saturating_sub(1)) / 2;
                while (y + 1) * (y + 2) / 2 <= i {
                    y += 1;
                }
                while y * (y + 1) / 2 > i {
                    y -= 1;
                }
                let x = i - y * (y + 1) / 2;
                Cell::xy(x as i32, y as i32)
            }
            LatticeKind::HexWindow => {
                let y = i / m;
                let t = i % m;
                Cell::xy(((y % 2) + 2 * t) as i32, y as i32)
            }
            LatticeKind::Cubic => {
                let z = i / (m * m);
                let r = i % (m * m);
                Cell::xyz((r % m) as i32, (r / m) as i32, z as i32)
            }
        };
        Ok(cell)
    }

    /// The origin cell fixed by symmetry breaking; always index 1.
    pub fn origin(&self) -> Cell {
        match self.kind {
            LatticeKind::Cubic => Cell::xyz(0, 0, 0),
            _ => Cell::xy(0, 0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cell_counts_match_closed_forms() {
        for m in 1..=100u32 {
            assert_eq!(GridSpec::square(m).cells().len(), (m * m) as usize);
            assert_eq!(
                GridSpec::triangular(m).cells().len(),
                (m * (m + 1) / 2) as usize
            );
            assert_eq!(GridSpec::hex_window(m).cells().len(), (m * m) as usize);
        }
        for m in 1..=20u32 {
            assert_eq!(GridSpec::cubic(m).cells().len(), (m * m * m) as usize);
        }
    }

    #[test]
    fn spec_card_examples() {
        assert_eq!(GridSpec::triangular(4).cell_count(), 10);
        assert_eq!(GridSpec::square(1).cells(), vec![Cell::xy(0, 0)]);
        assert_eq!(GridSpec::hex_window(94).cell_count(), 8836);
    }

    #[test]
    fn index_formulas() {
        let s3 = GridSpec::square(3);
        assert_eq!(s3.index_of(Cell::xy(0, 0)).unwrap().get(), 1);
        assert_eq!(s3.index_of(Cell::xy(2, 2)).unwrap().get(), 9);
        // level order of T_3: (0,0),(0,1),(1,1),(0,2),(1,2),(2,2)
        let t3 = GridSpec::triangular(3);
        assert_eq!(t3.index_of(Cell::xy(1, 2)).unwrap().get(), 5);
    }

    #[test]
    fn containment() {
        let h5 = GridSpec::hex_window(5);
        assert!(!h5.contains(Cell::xy(3, 2)));
        assert!(h5.contains(Cell::xy(4, 2)));
        assert!(!GridSpec::triangular(4).contains(Cell::xy(3, 2)));
    }

    #[test]
    fn invalid_cell_is_an_error() {
        let t4 = GridSpec::triangular(4);
        assert!(matches!(
            t4.index_of(Cell::xy(3, 2)),
            Err(Error::InvalidCell { .. })
        ));
        assert!(t4.cell_of(CellIndex(0)).is_err());
        assert!(t4.cell_of(CellIndex(11)).is_err());
    }

    #[test]
    fn canonical_order_is_index_order() {
        for grid in [
            GridSpec::square(7),
            GridSpec::triangular(9),
            GridSpec::hex_window(6),
            GridSpec::cubic(4),
        ] {
            for (i, c) in grid.cells().iter().enumerate() {
                assert_eq!(grid.index_of(*c).unwrap().get() as usize, i + 1);
                assert_eq!(grid.cell_of(CellIndex(i as u32 + 1)).unwrap(), *c);
            }
        }
    }

    proptest! {
        #[test]
        fn index_bijection(kind in 0..4usize, m in 1..40u32, raw in 0..1_000_000u32) {
            let grid = match kind {
                0 => GridSpec::square(m),
                1 => GridSpec::triangular(m),
                2 => GridSpec::hex_window(m),
                _ => GridSpec::cubic(m.min(30)),
            };
            let n = grid.cell_count() as u32;
            let idx = CellIndex(raw % n + 1);
            let cell = grid.cell_of(idx).unwrap();
            prop_assert!(grid.contains(cell));
            prop_assert_eq!(grid.index_of(cell).unwrap(), idx);
        }
    }
}
