//! Deciding, counting and parity-solving CNF instances.
//!
//! Two decision engines share one contract: every `Sat` outcome carries a
//! witness that has been re-checked against all clauses before it is
//! returned, and `Unknown` is reserved for exhausted budgets.

mod cdcl;
mod count;
mod external;
pub mod f2;

use std::path::PathBuf;
use std::time::{Duration, Instant};

pub use cdcl::{CdclSolver, CdclStats, CdclStatus, Limits};
pub use count::{count_models, CountLimits};
pub use external::solve_external;
pub use f2::{f2_build, f2_solve, F2Outcome, F2Solution, F2System};

use crate::encode::CnfInstance;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Sat,
    Unsat,
    Unknown,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Sat => "sat",
            Status::Unsat => "unsat",
            Status::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SolveStats {
    pub decisions: u64,
    pub conflicts: u64,
    pub propagations: u64,
    pub wall: Duration,
}

#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub status: Status,
    /// Full assignment as signed literals (`Sat` only).
    pub witness: Option<Vec<i32>>,
    /// DRAT proof location (`Unsat` via an external solver only).
    pub proof_path: Option<PathBuf>,
    pub stats: SolveStats,
}

#[derive(Debug, Clone)]
pub enum Engine {
    Embedded,
    /// Command template; `{cnf}` and `{proof}` placeholders are
    /// substituted, or the paths are appended as `<cnf> [<proof>]`.
    External(String),
}

#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub engine: Engine,
    pub time_budget: Option<Duration>,
    pub conflict_budget: Option<u64>,
    pub drat_requested: bool,
    /// Where to put the DRAT proof; a persistent temp path by default.
    pub proof_path: Option<PathBuf>,
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> SolverConfig {
        SolverConfig {
            engine: Engine::Embedded,
            time_budget: None,
            conflict_budget: None,
            drat_requested: false,
            proof_path: None,
            seed: 0,
        }
    }
}

pub(crate) fn assignment_satisfies(assignment: &[i32], clauses: &[Vec<i32>]) -> bool {
    clauses.iter().all(|c| {
        c.iter().any(|&l| {
            let idx = (l.unsigned_abs() - 1) as usize;
            idx < assignment.len() && assignment[idx] == l
        })
    })
}

/// Decides the instance with the embedded CDCL solver.
pub fn solve_embedded(instance: &CnfInstance, config: &SolverConfig) -> Result<SolveOutcome> {
    let start = Instant::now();
    let mut solver = CdclSolver::new(instance.n_vars, config.seed);
    let mut root_unsat = false;
    for clause in &instance.clauses {
        if !solver.add_clause(clause) {
            root_unsat = true;
            break;
        }
    }
    let limits = Limits {
        deadline: config.time_budget.map(|d| start + d),
        max_conflicts: config.conflict_budget,
    };
    let status = if root_unsat {
        CdclStatus::Unsat
    } else {
        solver.solve(&limits)
    };
    let stats = SolveStats {
        decisions: solver.stats.decisions,
        conflicts: solver.stats.conflicts,
        propagations: solver.stats.propagations,
        wall: start.elapsed(),
    };
    let outcome = match status {
        CdclStatus::Sat => {
            let witness = solver.model();
            assert!(
                assignment_satisfies(&witness, &instance.clauses),
                "solver returned a model that fails verification"
            );
            SolveOutcome {
                status: Status::Sat,
                witness: Some(witness),
                proof_path: None,
                stats,
            }
        }
        CdclStatus::Unsat => SolveOutcome {
            status: Status::Unsat,
            witness: None,
            proof_path: None,
            stats,
        },
        CdclStatus::Unknown => SolveOutcome {
            status: Status::Unknown,
            witness: None,
            proof_path: None,
            stats,
        },
    };
    Ok(outcome)
}

/// Dispatches on the configured engine.
pub fn solve(instance: &CnfInstance, config: &SolverConfig) -> Result<SolveOutcome> {
    match config.engine {
        Engine::Embedded => solve_embedded(instance, config),
        Engine::External(_) => solve_external(instance, config),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encode::{build_cnf, BreakMode, ConstraintKind};
    use crate::lattice::GridSpec;
    use crate::oracle;
    use crate::patterns::FamilyId;

    fn nm(grid: GridSpec, family: FamilyId) -> CnfInstance {
        build_cnf(&grid, family, ConstraintKind::NotMonochromatic, BreakMode::None).unwrap()
    }

    #[test]
    fn triangle_thresholds() {
        // Φ_4 unsatisfiable, Φ_3 satisfiable
        let phi4 = nm(GridSpec::triangular(4), FamilyId::TriAll);
        assert_eq!(solve_embedded(&phi4, &SolverConfig::default()).unwrap().status, Status::Unsat);
        let phi3 = nm(GridSpec::triangular(3), FamilyId::TriAll);
        let out = solve_embedded(&phi3, &SolverConfig::default()).unwrap();
        assert_eq!(out.status, Status::Sat);
        // decoded witness passes the oracle
        let col = crate::encode::decode_witness(&phi3, out.witness.as_ref().unwrap()).unwrap();
        assert!(oracle::check(&col, FamilyId::TriAll, ConstraintKind::NotMonochromatic)
            .unwrap()
            .is_ok());
    }

    #[test]
    fn omega7_is_unsat() {
        // Σ(□,2) = 7: no coloring of S_7 avoids monochromatic squares
        let omega7 = nm(GridSpec::square(7), FamilyId::SqAll);
        let out = solve_embedded(&omega7, &SolverConfig::default()).unwrap();
        assert_eq!(out.status, Status::Unsat);
        let omega6 = nm(GridSpec::square(6), FamilyId::SqAll);
        assert_eq!(solve_embedded(&omega6, &SolverConfig::default()).unwrap().status, Status::Sat);
    }

    #[test]
    fn empty_instance_is_sat() {
        let inst = nm(GridSpec::square(1), FamilyId::SqAxis);
        assert_eq!(inst.clauses.len(), 0);
        let out = solve_embedded(&inst, &SolverConfig::default()).unwrap();
        assert_eq!(out.status, Status::Sat);
        assert_eq!(out.witness.unwrap().len(), 1);
    }

    #[test]
    fn embedded_agrees_with_brute_force_small_grids() {
        for (grid, family) in [
            (GridSpec::square(4), FamilyId::SqAxis),
            (GridSpec::square(4), FamilyId::SqAll),
            (GridSpec::triangular(5), FamilyId::TriUpDown),
            (GridSpec::triangular(5), FamilyId::TriUp),
            (GridSpec::hex_window(4), FamilyId::Hexagon),
            (GridSpec::cubic(2), FamilyId::Cube),
        ] {
            let inst = nm(grid, family);
            let n = inst.n_vars;
            let brute_sat = (0..(1u64 << n)).any(|m| {
                inst.clauses.iter().all(|c| {
                    c.iter().any(|&l| (m >> (l.unsigned_abs() - 1) & 1 == 1) == (l > 0))
                })
            });
            let got = solve_embedded(&inst, &SolverConfig::default()).unwrap().status;
            assert_eq!(got, if brute_sat { Status::Sat } else { Status::Unsat }, "{family}");
        }
    }

    #[test]
    fn deterministic_given_seed() {
        let inst = nm(GridSpec::square(5), FamilyId::SqAll);
        let a = solve_embedded(&inst, &SolverConfig::default()).unwrap();
        let b = solve_embedded(&inst, &SolverConfig::default()).unwrap();
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.stats.conflicts, b.stats.conflicts);
    }

    #[test]
    fn unknown_on_tiny_conflict_budget() {
        let inst = nm(GridSpec::square(7), FamilyId::SqAll);
        let config = SolverConfig {
            conflict_budget: Some(1),
            ..SolverConfig::default()
        };
        assert_eq!(solve_embedded(&inst, &config).unwrap().status, Status::Unknown);
    }
}
