//! Solver-independent verification of colorings.
//!
//! [`check`] scans the configurations of a family directly and reports the
//! first one the coloring violates. It never goes through the CNF encoding
//! or a solver, which makes it the ground truth the encoding and solver
//! tests are measured against.
//!
//! Colorings have a line-oriented text format: a header `<kind> <m>`, then
//! one `0`/`1` row per canonical grid row (triangular row `y` has `y + 1`
//! characters, hex rows have `m`, cube slices are separated by a blank
//! line), with a trailing newline.

use crate::encode::ConstraintKind;
use crate::lattice::{CellIndex, GridSpec, LatticeKind};
use crate::patterns::{self, Configuration, FamilyId};
use crate::{Error, Result};

/// A total 2-coloring of a grid; `bits[i]` is the color of cell index
/// `i + 1`, `true` meaning black (1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    pub grid: GridSpec,
    pub bits: Vec<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationDetail {
    AllZero,
    AllOne,
    Unbalanced(u32),
    EvenParity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    Violation {
        configuration: Configuration,
        detail: ViolationDetail,
    },
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }
}

impl Coloring {
    pub fn new(grid: GridSpec, bits: Vec<bool>) -> Result<Coloring> {
        if bits.len() != grid.cell_count() {
            return Err(Error::RowLengthMismatch {
                row: 0,
                got: bits.len(),
                expected: grid.cell_count(),
            });
        }
        Ok(Coloring { grid, bits })
    }

    pub fn get(&self, idx: CellIndex) -> bool {
        self.bits[(idx.get() - 1) as usize]
    }

    pub fn black_count(&self) -> usize {
        self.bits.iter().filter(|b| **b).count()
    }

    /// Renders the coloring file format (also the `render` ASCII format).
    pub fn to_text(&self) -> String {
        let m = self.grid.m as usize;
        let mut out = format!("{} {}\n", self.grid.kind.name(), self.grid.m);
        let mut pos = 0usize;
        let mut push_row = |out: &mut String, len: usize| {
            for _ in 0..len {
                out.push(if self.bits[pos] { '1' } else { '0' });
                pos += 1;
            }
            out.push('\n');
        };
        match self.grid.kind {
            LatticeKind::Square2D | LatticeKind::HexWindow => {
                for _ in 0..m {
                    push_row(&mut out, m);
                }
            }
            LatticeKind::Triangular => {
                for y in 0..m {
                    push_row(&mut out, y + 1);
                }
            }
            LatticeKind::Cubic => {
                for z in 0..m {
                    if z > 0 {
                        out.push('\n');
                    }
                    for _ in 0..m {
                        push_row(&mut out, m);
                    }
                }
            }
        }
        out
    }
}

fn violates(sum: u32, arity: u32, constraint: ConstraintKind) -> Option<ViolationDetail> {
    match constraint {
        ConstraintKind::NotMonochromatic => {
            if sum == 0 {
                Some(ViolationDetail::AllZero)
            } else if sum == arity {
                Some(ViolationDetail::AllOne)
            } else {
                None
            }
        }
        ConstraintKind::BalancedTwoTwo => {
            if sum != 2 {
                Some(ViolationDetail::Unbalanced(sum))
            } else {
                None
            }
        }
        ConstraintKind::OddParity => {
            if sum % 2 == 0 {
                Some(ViolationDetail::EvenParity)
            } else {
                None
            }
        }
    }
}

/// Returns the first violated configuration in enumeration order, or `Ok`.
pub fn check(
    coloring: &Coloring,
    family: FamilyId,
    constraint: ConstraintKind,
) -> Result<Verdict> {
    let mut verdict = Verdict::Ok;
    patterns::for_each(&coloring.grid, family, |cfg| {
        let sum = cfg.vertices.iter().filter(|v| coloring.get(**v)).count() as u32;
        if let Some(detail) = violates(sum, cfg.vertices.len() as u32, constraint) {
            verdict = Verdict::Violation {
                configuration: cfg.clone(),
                detail,
            };
            return false;
        }
        true
    })?;
    Ok(verdict)
}

/// Diagnostic variant of [`check`]: collects every violated configuration.
pub fn check_all(
    coloring: &Coloring,
    family: FamilyId,
    constraint: ConstraintKind,
) -> Result<Vec<(Configuration, ViolationDetail)>> {
    let mut out = Vec::new();
    patterns::for_each(&coloring.grid, family, |cfg| {
        let sum = cfg.vertices.iter().filter(|v| coloring.get(**v)).count() as u32;
        if let Some(detail) = violates(sum, cfg.vertices.len() as u32, constraint) {
            out.push((cfg.clone(), detail));
        }
        true
    })?;
    Ok(out)
}

/// Parses the coloring file format.
pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::BadHeader("empty file".into()))?;
    let mut tokens = header.split_whitespace();
    let kind = tokens
        .next()
        .and_then(LatticeKind::parse)
        .ok_or_else(|| Error::BadHeader(format!("unknown grid kind in {header:?}")))?;
    let m: u32 = tokens
        .next()
        .and_then(|t| t.parse().ok())
        .filter(|&m| m >= 1)
        .ok_or_else(|| Error::BadHeader(format!("bad size in {header:?}")))?;
    let grid = GridSpec { kind, m };

    let row_lengths: Vec<usize> = {
        let m = m as usize;
        match kind {
            LatticeKind::Square2D | LatticeKind::HexWindow => vec![m; m],
            LatticeKind::Triangular => (1..=m).collect(),
            LatticeKind::Cubic => vec![m; m * m],
        }
    };

    let mut bits = Vec::with_capacity(grid.cell_count());
    let allow_blank = kind == LatticeKind::Cubic;
    let mut row = 0usize;
    for line in lines.by_ref() {
        if line.is_empty() && allow_blank {
            continue;
        }
        if row >= row_lengths.len() {
            return Err(Error::RowLengthMismatch {
                row,
                got: line.len(),
                expected: 0,
            });
        }
        let expected = row_lengths[row];
        if line.chars().count() != expected {
            return Err(Error::RowLengthMismatch {
                row,
                got: line.chars().count(),
                expected,
            });
        }
        for ch in line.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => return Err(Error::BadCharacter { row, ch: other }),
            }
        }
        row += 1;
    }
    if row < row_lengths.len() {
        return Err(Error::RowLengthMismatch {
            row,
            got: 0,
            expected: row_lengths[row],
        });
    }
    Coloring::new(grid, bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Cell;
    use proptest::prelude::*;

    #[test]
    fn checkerboard_s2() {
        let col = parse_coloring("square 2\n01\n10\n").unwrap();
        assert_eq!(col.bits, vec![false, true, true, false]);
        let v = check(&col, FamilyId::SqAxis, ConstraintKind::NotMonochromatic).unwrap();
        assert!(v.is_ok());
    }

    #[test]
    fn tri_coloring_file() {
        let col = parse_coloring("tri 3\n0\n01\n010\n").unwrap();
        assert_eq!(col.bits.len(), 6);
        assert!(col.get(col.grid.index_of(Cell::xy(1, 1)).unwrap()));
    }

    #[test]
    fn all_black_unit_square_violates() {
        let col = Coloring::new(GridSpec::square(2), vec![true; 4]).unwrap();
        match check(&col, FamilyId::SqAxis, ConstraintKind::NotMonochromatic).unwrap() {
            Verdict::Violation {
                configuration,
                detail,
            } => {
                assert_eq!(detail, ViolationDetail::AllOne);
                let idxs: Vec<u32> = configuration.vertices.iter().map(|v| v.get()).collect();
                assert_eq!(idxs, vec![1, 2, 3, 4]);
            }
            Verdict::Ok => panic!("expected a violation"),
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_coloring(""), Err(Error::BadHeader(_))));
        assert!(matches!(
            parse_coloring("pentagon 3\n"),
            Err(Error::BadHeader(_))
        ));
        assert!(matches!(
            parse_coloring("square 2\n01\n1\n"),
            Err(Error::RowLengthMismatch { row: 1, got: 1, expected: 2 })
        ));
        assert!(matches!(
            parse_coloring("square 2\n01\n1x\n"),
            Err(Error::BadCharacter { row: 1, ch: 'x' })
        ));
        assert!(matches!(
            parse_coloring("square 2\n01\n"),
            Err(Error::RowLengthMismatch { row: 1, got: 0, expected: 2 })
        ));
    }

    #[test]
    fn cube_round_trip() {
        let grid = GridSpec::cubic(2);
        let bits = vec![true, false, false, true, false, true, true, false];
        let col = Coloring::new(grid, bits).unwrap();
        let text = col.to_text();
        assert_eq!(text, "cube 2\n10\n01\n\n01\n10\n");
        assert_eq!(parse_coloring(&text).unwrap(), col);
    }

    proptest! {
        #[test]
        fn text_round_trip(kind in 0..4usize, m in 1..8u32, seed in any::<u64>()) {
            let grid = match kind {
                0 => GridSpec::square(m),
                1 => GridSpec::triangular(m),
                2 => GridSpec::hex_window(m),
                _ => GridSpec::cubic(m.min(4)),
            };
            let mut state = seed | 1;
            let bits: Vec<bool> = (0..grid.cell_count()).map(|_| {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state & 1 == 1
            }).collect();
            let col = Coloring::new(grid, bits).unwrap();
            let text = col.to_text();
            prop_assert!(text.ends_with('\n'));
            prop_assert_eq!(parse_coloring(&text).unwrap(), col);
        }
    }
}
