//! Exact model counting by exhaustive backtracking.
//!
//! Variables are assigned in index order; per-clause true/false counters
//! prune as soon as a clause is fully falsified, and a branch where every
//! clause already holds contributes `2^free` models at once. Counts are
//! exact, so the variable ceiling and model cap keep runs at enumeration
//! scale.

use std::time::Instant;

use crate::encode::CnfInstance;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct CountLimits {
    pub max_vars: u32,
    pub max_models: u64,
    pub deadline: Option<Instant>,
}

impl Default for CountLimits {
    fn default() -> CountLimits {
        CountLimits {
            max_vars: 64,
            max_models: 10_000_000,
            deadline: None,
        }
    }
}

struct Counter<'a> {
    clauses: &'a [Vec<i32>],
    // (clause, literal-sign) occurrences per variable
    occ: Vec<Vec<(u32, bool)>>,
    true_count: Vec<u32>,
    false_count: Vec<u32>,
    unsatisfied: usize,
    n_vars: usize,
    total: u64,
    limits: CountLimits,
    nodes: u64,
}

impl<'a> Counter<'a> {
    fn bump(&mut self, add: u64) -> Result<()> {
        self.total = self
            .total
            .checked_add(add)
            .ok_or_else(|| Error::BudgetExceeded("model count overflows u64".into()))?;
        if self.total > self.limits.max_models {
            return Err(Error::BudgetExceeded(format!(
                "more than {} models",
                self.limits.max_models
            )));
        }
        Ok(())
    }

    fn assign(&mut self, var: usize, value: bool) -> bool {
        let mut conflict = false;
        for i in 0..self.occ[var].len() {
            let (cid, positive) = self.occ[var][i];
            let cid = cid as usize;
            if positive == value {
                self.true_count[cid] += 1;
                if self.true_count[cid] == 1 {
                    self.unsatisfied -= 1;
                }
            } else {
                self.false_count[cid] += 1;
                if self.false_count[cid] as usize == self.clauses[cid].len() {
                    conflict = true;
                }
            }
        }
        conflict
    }

    fn unassign(&mut self, var: usize, value: bool) {
        for i in 0..self.occ[var].len() {
            let (cid, positive) = self.occ[var][i];
            let cid = cid as usize;
            if positive == value {
                self.true_count[cid] -= 1;
                if self.true_count[cid] == 0 {
                    self.unsatisfied += 1;
                }
            } else {
                self.false_count[cid] -= 1;
            }
        }
    }

    fn recurse(&mut self, var: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes % 65536 == 0 {
            if let Some(deadline) = self.limits.deadline {
                if Instant::now() >= deadline {
                    return Err(Error::BudgetExceeded("time budget exhausted".into()));
                }
            }
        }
        if self.unsatisfied == 0 {
            let free = (self.n_vars - var) as u32;
            if free >= 64 {
                return Err(Error::BudgetExceeded("model count overflows u64".into()));
            }
            return self.bump(1u64 << free);
        }
        if var == self.n_vars {
            return Ok(()); // fully assigned, some clause still lacks a true literal
        }
        for value in [false, true] {
            let conflict = self.assign(var, value);
            if !conflict {
                self.recurse(var + 1)?;
            }
            self.unassign(var, value);
        }
        Ok(())
    }
}

/// Exact number of satisfying assignments of the instance.
pub fn count_models(instance: &CnfInstance, limits: &CountLimits) -> Result<u64> {
    let n_vars = instance.n_vars as usize;
    if instance.n_vars > limits.max_vars {
        return Err(Error::BudgetExceeded(format!(
            "{} variables exceed the counting ceiling {}",
            instance.n_vars, limits.max_vars
        )));
    }
    if instance.clauses.iter().any(|c| c.is_empty()) {
        return Ok(0);
    }
    let mut occ: Vec<Vec<(u32, bool)>> = vec![Vec::new(); n_vars];
    for (cid, clause) in instance.clauses.iter().enumerate() {
        for &lit in clause {
            occ[lit.unsigned_abs() as usize - 1].push((cid as u32, lit > 0));
        }
    }
    let mut counter = Counter {
        clauses: &instance.clauses,
        occ,
        true_count: vec![0; instance.clauses.len()],
        false_count: vec![0; instance.clauses.len()],
        unsatisfied: instance.clauses.len(),
        n_vars,
        total: 0,
        limits: limits.clone(),
        nodes: 0,
    };
    counter.recurse(0)?;
    Ok(counter.total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encode::{build_cnf, BreakMode, ConstraintKind};
    use crate::lattice::GridSpec;
    use crate::patterns::FamilyId;

    fn models(grid: GridSpec, family: FamilyId, constraint: ConstraintKind, mode: BreakMode) -> u64 {
        let inst = build_cnf(&grid, family, constraint, mode).unwrap();
        count_models(&inst, &CountLimits::default()).unwrap()
    }

    #[test]
    fn paper_counts() {
        // Ω_4: all squares in S_4
        assert_eq!(
            models(GridSpec::square(4), FamilyId::SqAll, ConstraintKind::NotMonochromatic, BreakMode::None),
            5006
        );
        // Φ_3: all triangles in T_3
        assert_eq!(
            models(GridSpec::triangular(3), FamilyId::TriAll, ConstraintKind::NotMonochromatic, BreakMode::None),
            18
        );
        // Π_2: balanced unit square
        assert_eq!(
            models(GridSpec::square(2), FamilyId::SqAxis, ConstraintKind::BalancedTwoTwo, BreakMode::None),
            6
        );
    }

    #[test]
    fn fix_origin_halves_counts() {
        for (grid, family) in [
            (GridSpec::square(3), FamilyId::SqAll),
            (GridSpec::square(4), FamilyId::SqAxis),
            (GridSpec::triangular(4), FamilyId::TriUpDown),
        ] {
            let full = models(grid, family, ConstraintKind::NotMonochromatic, BreakMode::None);
            let half = models(grid, family, ConstraintKind::NotMonochromatic, BreakMode::FixOrigin);
            assert_eq!(full, 2 * half, "{family}");
        }
    }

    #[test]
    fn brute_force_agreement() {
        for (grid, family, constraint) in [
            (GridSpec::square(3), FamilyId::SqAxis, ConstraintKind::NotMonochromatic),
            (GridSpec::square(3), FamilyId::SqAxis, ConstraintKind::BalancedTwoTwo),
            (GridSpec::square(3), FamilyId::SqAxis, ConstraintKind::OddParity),
            (GridSpec::triangular(4), FamilyId::TriAll, ConstraintKind::NotMonochromatic),
        ] {
            let inst = build_cnf(&grid, family, constraint, BreakMode::None).unwrap();
            let n = inst.n_vars;
            let brute = (0..(1u64 << n))
                .filter(|m| {
                    inst.clauses.iter().all(|c| {
                        c.iter().any(|&l| (m >> (l.unsigned_abs() - 1) & 1 == 1) == (l > 0))
                    })
                })
                .count() as u64;
            assert_eq!(count_models(&inst, &CountLimits::default()).unwrap(), brute);
        }
    }

    #[test]
    fn empty_formula_counts_all_colorings() {
        let inst = build_cnf(
            &GridSpec::square(1),
            FamilyId::SqAxis,
            ConstraintKind::NotMonochromatic,
            BreakMode::None,
        )
        .unwrap();
        assert_eq!(count_models(&inst, &CountLimits::default()).unwrap(), 2);
    }

    #[test]
    fn ceiling_is_enforced() {
        let inst = build_cnf(
            &GridSpec::square(9),
            FamilyId::SqAxis,
            ConstraintKind::NotMonochromatic,
            BreakMode::None,
        )
        .unwrap();
        let limits = CountLimits { max_vars: 16, ..CountLimits::default() };
        assert!(matches!(
            count_models(&inst, &limits),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
