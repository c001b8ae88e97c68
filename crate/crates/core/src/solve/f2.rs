//! Linear parity systems over GF(2).
//!
//! The odd-parity question ("every axis-parallel square has an odd number
//! of black vertices") is a linear system: one equation per square, one
//! variable per cell, right-hand side 1. Gaussian elimination decides it
//! exactly; an inconsistent row `0 = 1` proves infeasibility.

use crate::lattice::GridSpec;
use crate::patterns::{self, FamilyId};
use crate::{Error, Result};

/// One row: a coefficient bit-vector and its right-hand side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Row {
    coeffs: Vec<u64>,
    pub rhs: bool,
}

impl F2Row {
    fn zero(n_vars: usize) -> F2Row {
        F2Row {
            coeffs: vec![0; n_vars.div_ceil(64)],
            rhs: false,
        }
    }

    pub fn get(&self, col: usize) -> bool {
        self.coeffs[col / 64] >> (col % 64) & 1 == 1
    }

    fn set(&mut self, col: usize) {
        self.coeffs[col / 64] ^= 1 << (col % 64);
    }

    fn xor_assign(&mut self, other: &F2Row) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a ^= b;
        }
        self.rhs ^= other.rhs;
    }

    fn leading(&self) -> Option<usize> {
        for (i, w) in self.coeffs.iter().enumerate() {
            if *w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2System {
    pub n_vars: usize,
    pub rows: Vec<F2Row>,
}

impl F2System {
    pub fn new(n_vars: usize) -> F2System {
        F2System { n_vars, rows: Vec::new() }
    }

    /// Adds the equation `Σ x_col = rhs` (columns are 0-based).
    pub fn add_equation(&mut self, cols: &[usize], rhs: bool) {
        let mut row = F2Row::zero(self.n_vars);
        for &c in cols {
            debug_assert!(c < self.n_vars);
            row.set(c);
        }
        row.rhs = rhs;
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum F2Outcome {
    /// One solution, the system rank, and the full count `2^(n - rank)`.
    Feasible(F2Solution),
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Solution {
    pub assignment: Vec<bool>,
    pub rank: usize,
    pub n_vars: usize,
}

impl F2Solution {
    /// `2^(n_vars - rank)`, or `None` if it does not fit in a u128.
    pub fn solution_count(&self) -> Option<u128> {
        let free = self.n_vars - self.rank;
        if free < 128 {
            Some(1u128 << free)
        } else {
            None
        }
    }
}

/// Builds the odd-parity system of a 4-vertex family: one equation per
/// configuration, coefficients at its vertices, right-hand side 1.
pub fn f2_build(grid: &GridSpec, family: FamilyId) -> Result<F2System> {
    if family.arity() != 4 {
        return Err(Error::ArityMismatch {
            constraint: "odd-parity".to_string(),
            family: family.to_string(),
            arity: family.arity(),
        });
    }
    let mut sys = F2System::new(grid.cell_count());
    patterns::for_each(grid, family, |cfg| {
        let cols: Vec<usize> = cfg.vertices.iter().map(|v| (v.get() - 1) as usize).collect();
        sys.add_equation(&cols, true);
        true
    })?;
    Ok(sys)
}

/// Gaussian elimination. Infeasible iff elimination produces a row 0 = 1.
pub fn f2_solve(system: &F2System) -> F2Outcome {
    let n = system.n_vars;
    // pivot rows in echelon form, with their pivot columns
    let mut pivots: Vec<(usize, F2Row)> = Vec::new();
    for row in &system.rows {
        let mut row = row.clone();
        for (col, pivot) in &pivots {
            if row.get(*col) {
                row.xor_assign(pivot);
            }
        }
        match row.leading() {
            Some(col) => pivots.push((col, row)),
            None => {
                if row.rhs {
                    return F2Outcome::Infeasible;
                }
            }
        }
    }
    let rank = pivots.len();
    // back-substitution with all free variables set to 0
    let mut assignment = vec![false; n];
    for (col, row) in pivots.iter().rev() {
        let mut v = row.rhs;
        for c in (col + 1)..n {
            if row.get(c) && assignment[c] {
                v = !v;
            }
        }
        assignment[*col] = v;
    }
    F2Outcome::Feasible(F2Solution { assignment, rank, n_vars: n })
}
