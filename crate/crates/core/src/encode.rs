//! CNF compilation of (grid, family, constraint) triples.
//!
//! Per configuration the encodings are:
//!
//! * `NotMonochromatic` — one all-positive and one all-negative clause,
//! * `BalancedTwoTwo` — eight ternary clauses forbidding every same-signed
//!   triple of the four vertices (equivalent to "exactly two of four"),
//! * `OddParity` — the eight width-4 clauses blocking each even-parity
//!   assignment of the four vertices.
//!
//! Symmetry breaking appends a unit clause fixing the origin cell to color
//! 0 and, in `LexLeader` mode, chained lexicographic-leader clauses for the
//! two dihedral generators with auxiliary variables above the cell range.
//! Clause order is fully deterministic: constraint clauses in enumeration
//! order (positive before negative per configuration), breaking clauses
//! last.

use crate::lattice::{Cell, GridSpec, LatticeKind};
use crate::oracle::Coloring;
use crate::patterns::{self, FamilyId};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstraintKind {
    NotMonochromatic,
    BalancedTwoTwo,
    OddParity,
}

impl ConstraintKind {
    pub fn name(self) -> &'static str {
        match self {
            ConstraintKind::NotMonochromatic => "not-mono",
            ConstraintKind::BalancedTwoTwo => "balanced-2-2",
            ConstraintKind::OddParity => "odd-parity",
        }
    }

    pub fn parse(s: &str) -> Option<ConstraintKind> {
        match s {
            "not-mono" => Some(ConstraintKind::NotMonochromatic),
            "balanced-2-2" => Some(ConstraintKind::BalancedTwoTwo),
            "odd-parity" => Some(ConstraintKind::OddParity),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BreakMode {
    None,
    FixOrigin,
    LexLeader,
}

impl BreakMode {
    pub fn name(self) -> &'static str {
        match self {
            BreakMode::None => "none",
            BreakMode::FixOrigin => "fix-origin",
            BreakMode::LexLeader => "lex-leader",
        }
    }

    pub fn parse(s: &str) -> Option<BreakMode> {
        match s {
            "none" => Some(BreakMode::None),
            "fix-origin" => Some(BreakMode::FixOrigin),
            "lex-leader" => Some(BreakMode::LexLeader),
            _ => None,
        }
    }
}

/// A clause is a list of nonzero DIMACS literals.
pub type Clause = Vec<i32>;

/// A compiled CNF instance. `n_vars` includes lex-leader auxiliaries, so it
/// can exceed the grid's cell count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfInstance {
    pub n_vars: u32,
    pub clauses: Vec<Clause>,
    pub grid: GridSpec,
    pub family: FamilyId,
    pub constraint: ConstraintKind,
    pub break_mode: BreakMode,
}

fn check_arity(family: FamilyId, constraint: ConstraintKind) -> Result<()> {
    if constraint != ConstraintKind::NotMonochromatic && family.arity() != 4 {
        return Err(Error::ArityMismatch {
            constraint: constraint.name().to_string(),
            family: family.to_string(),
            arity: family.arity(),
        });
    }
    Ok(())
}

/// The dihedral generators σ and ρ as coordinate maps.
pub(crate) fn generator_maps(
    kind: LatticeKind,
    m: i32,
) -> Result<[fn(i32, Cell) -> Cell; 2]> {
    let _ = m;
    match kind {
        LatticeKind::Square2D => Ok([
            |_, c| Cell::xy(c.y, c.x),
            |m, c| Cell::xy(m - 1 - c.y, c.x),
        ]),
        LatticeKind::Triangular => Ok([
            // mirror within each level
            |_, c| Cell::xy(c.y - c.x, c.y),
            // order-3 rotation
            |m, c| Cell::xy(m - 1 - c.y, m - 1 - c.y + c.x),
        ]),
        other => Err(Error::LexUnsupported(other)),
    }
}

/// Streams every clause of the instance in canonical order. Returns the
/// total variable count (cells plus auxiliaries).
fn emit_clauses(
    grid: &GridSpec,
    family: FamilyId,
    constraint: ConstraintKind,
    break_mode: BreakMode,
    f: &mut dyn FnMut(&[i32]),
) -> Result<u32> {
    check_arity(family, constraint)?;
    let n_cells = grid.cell_count() as u32;
    let mut clause: Vec<i32> = Vec::with_capacity(family.arity());

    patterns::for_each(grid, family, |cfg| {
        match constraint {
            ConstraintKind::NotMonochromatic => {
                clause.clear();
                clause.extend(cfg.vertices.iter().map(|v| v.lit(true)));
                f(&clause);
                clause.clear();
                clause.extend(cfg.vertices.iter().map(|v| v.lit(false)));
                f(&clause);
            }
            ConstraintKind::BalancedTwoTwo => {
                for positive in [false, true] {
                    for omit in 0..4 {
                        clause.clear();
                        for (i, v) in cfg.vertices.iter().enumerate() {
                            if i != omit {
                                clause.push(v.lit(positive));
                            }
                        }
                        f(&clause);
                    }
                }
            }
            ConstraintKind::OddParity => {
                for mask in 0..16u32 {
                    if mask.count_ones() % 2 != 0 {
                        continue;
                    }
                    clause.clear();
                    for (i, v) in cfg.vertices.iter().enumerate() {
                        clause.push(v.lit(mask & (1 << i) == 0));
                    }
                    f(&clause);
                }
            }
        }
        true
    })?;

    let mut n_vars = n_cells;
    if break_mode != BreakMode::None {
        let origin = grid.index_of_unchecked(grid.origin());
        f(&[origin.lit(false)]);
    }
    if break_mode == BreakMode::LexLeader {
        let maps = generator_maps(grid.kind, grid.m as i32)?;
        for map in maps {
            // positions the generator actually moves, in index order
            let mut pairs: Vec<(i32, i32)> = Vec::new();
            for (i, cell) in grid.cells().iter().enumerate() {
                let image = map(grid.m as i32, *cell);
                let x = (i + 1) as i32;
                let y = grid.index_of_unchecked(image).get() as i32;
                if x != y {
                    pairs.push((x, y));
                }
            }
            let r = pairs.len();
            let mut prev_e = 0i32;
            for (t, (x, y)) in pairs.iter().copied().enumerate() {
                if t == 0 {
                    f(&[-x, y]);
                } else {
                    f(&[-prev_e, -x, y]);
                }
                if t + 1 < r {
                    n_vars += 1;
                    let e = n_vars as i32;
                    if t == 0 {
                        // e ↔ (x ↔ y)
                        f(&[-e, -x, y]);
                        f(&[-e, x, -y]);
                        f(&[-x, -y, e]);
                        f(&[x, y, e]);
                    } else {
                        // e ↔ prev_e ∧ (x ↔ y)
                        f(&[-e, prev_e]);
                        f(&[-e, -x, y]);
                        f(&[-e, x, -y]);
                        f(&[-prev_e, -x, -y, e]);
                        f(&[-prev_e, x, y, e]);
                    }
                    prev_e = e;
                }
            }
        }
    }
    Ok(n_vars)
}

/// Variable and clause totals of an instance, computed without storing
/// any clause. This is how arbitrarily large instances are sized.
pub fn stats(
    grid: &GridSpec,
    family: FamilyId,
    constraint: ConstraintKind,
    break_mode: BreakMode,
) -> Result<(u32, u64)> {
    let mut n_clauses = 0u64;
    let n_vars = emit_clauses(grid, family, constraint, break_mode, &mut |_| {
        n_clauses += 1;
    })?;
    Ok((n_vars, n_clauses))
}

/// Compiles the instance, materializing the clause list.
pub fn build_cnf(
    grid: &GridSpec,
    family: FamilyId,
    constraint: ConstraintKind,
    break_mode: BreakMode,
) -> Result<CnfInstance> {
    let mut clauses = Vec::new();
    let n_vars = emit_clauses(grid, family, constraint, break_mode, &mut |c| {
        clauses.push(c.to_vec());
    })?;
    Ok(CnfInstance {
        n_vars,
        clauses,
        grid: *grid,
        family,
        constraint,
        break_mode,
    })
}

/// Streams the clauses of a (possibly huge) instance to `f` without
/// materializing them; same order as [`build_cnf`].
pub fn for_each_clause(
    grid: &GridSpec,
    family: FamilyId,
    constraint: ConstraintKind,
    break_mode: BreakMode,
    mut f: impl FnMut(&[i32]),
) -> Result<u32> {
    emit_clauses(grid, family, constraint, break_mode, &mut f)
}

/// Decodes a satisfying assignment (a list of signed literals) into a
/// coloring. Auxiliary lex-leader variables are ignored; every cell
/// variable must be assigned.
pub fn decode_witness(instance: &CnfInstance, assignment: &[i32]) -> Result<Coloring> {
    let n_cells = instance.grid.cell_count();
    let mut bits = vec![None; n_cells];
    for &lit in assignment {
        let var = lit.unsigned_abs() as usize;
        if lit != 0 && 1 <= var && var <= n_cells {
            bits[var - 1] = Some(lit > 0);
        }
    }
    let mut out = Vec::with_capacity(n_cells);
    for (i, b) in bits.into_iter().enumerate() {
        match b {
            Some(b) => out.push(b),
            None => {
                return Err(Error::IncompleteAssignment { var: i as u32 + 1 });
            }
        }
    }
    Ok(Coloring {
        grid: instance.grid,
        bits: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::GridSpec;

    fn nm(grid: &GridSpec, family: FamilyId, mode: BreakMode) -> CnfInstance {
        build_cnf(grid, family, ConstraintKind::NotMonochromatic, mode).unwrap()
    }

    #[test]
    fn table_instance_sizes() {
        // (k, m, vars, clauses) from the minimal UNSAT instances
        let one_way = [(2u32, 27u32, 729u32, 7489u64), (3, 40, 1600, 17395), (4, 52, 2704, 29537), (5, 66, 4356, 49375)];
        for (k, m, vars, clauses) in one_way {
            let inst = nm(&GridSpec::square(m), FamilyId::RectHom(k), BreakMode::FixOrigin);
            assert_eq!(inst.n_vars, vars);
            assert_eq!(inst.clauses.len() as u64, clauses);
        }
        let both = [(2u32, 23u32, 529u32, 9109u64), (3, 27, 729, 10225), (4, 28, 784, 8513)];
        for (k, m, vars, clauses) in both {
            let inst = nm(&GridSpec::square(m), FamilyId::RectHomBoth(k), BreakMode::FixOrigin);
            assert_eq!(inst.n_vars, vars);
            assert_eq!(inst.clauses.len() as u64, clauses);
        }
    }

    #[test]
    fn unit_square_instance() {
        let inst = nm(&GridSpec::square(2), FamilyId::SqAxis, BreakMode::None);
        assert_eq!(inst.n_vars, 4);
        assert_eq!(inst.clauses, vec![vec![1, 2, 3, 4], vec![-1, -2, -3, -4]]);
    }

    #[test]
    fn fix_origin_is_last_unit_clause() {
        let inst = nm(&GridSpec::square(3), FamilyId::SqAxis, BreakMode::FixOrigin);
        assert_eq!(inst.clauses.last().unwrap(), &vec![-1]);
        assert_eq!(inst.clauses.len(), 2 * 5 + 1);
    }

    #[test]
    fn balanced_two_two_truth_table() {
        let inst = build_cnf(
            &GridSpec::square(2),
            FamilyId::SqAxis,
            ConstraintKind::BalancedTwoTwo,
            BreakMode::None,
        )
        .unwrap();
        assert_eq!(inst.clauses.len(), 8);
        let mut sat_count = 0;
        for m in 0..16u32 {
            let assign = |v: i32| m & (1 << (v.unsigned_abs() - 1)) != 0;
            let ok = inst
                .clauses
                .iter()
                .all(|cl| cl.iter().any(|&l| assign(l) == (l > 0)));
            if ok {
                assert_eq!(m.count_ones(), 2);
                sat_count += 1;
            }
        }
        assert_eq!(sat_count, 6);
    }

    #[test]
    fn odd_parity_truth_table() {
        let inst = build_cnf(
            &GridSpec::square(2),
            FamilyId::SqAxis,
            ConstraintKind::OddParity,
            BreakMode::None,
        )
        .unwrap();
        assert_eq!(inst.clauses.len(), 8);
        let mut sat_count = 0;
        for m in 0..16u32 {
            let assign = |v: i32| m & (1 << (v.unsigned_abs() - 1)) != 0;
            let ok = inst
                .clauses
                .iter()
                .all(|cl| cl.iter().any(|&l| assign(l) == (l > 0)));
            if ok {
                assert_eq!(m.count_ones() % 2, 1);
                sat_count += 1;
            }
        }
        assert_eq!(sat_count, 8);
    }

    #[test]
    fn arity_mismatch() {
        assert!(matches!(
            build_cnf(
                &GridSpec::triangular(3),
                FamilyId::TriAll,
                ConstraintKind::BalancedTwoTwo,
                BreakMode::None
            ),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn clause_invariants() {
        for mode in [BreakMode::None, BreakMode::FixOrigin, BreakMode::LexLeader] {
            let inst = nm(&GridSpec::square(4), FamilyId::SqAxis, mode);
            for cl in &inst.clauses {
                assert!(!cl.is_empty());
                for (i, &a) in cl.iter().enumerate() {
                    assert!(a != 0 && a.unsigned_abs() <= inst.n_vars);
                    for &b in &cl[i + 1..] {
                        assert!(a != b, "repeated literal");
                        assert!(a != -b, "complementary pair");
                    }
                }
            }
        }
    }

    #[test]
    fn decode_witness_roundtrip() {
        let inst = nm(&GridSpec::square(2), FamilyId::SqAxis, BreakMode::None);
        let col = decode_witness(&inst, &[1, -2, -3, -4]).unwrap();
        assert_eq!(col.bits, vec![true, false, false, false]);
        assert!(matches!(
            decode_witness(&inst, &[1, -2, -3]),
            Err(Error::IncompleteAssignment { var: 4 })
        ));
    }
}
