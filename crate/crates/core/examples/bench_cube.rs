use gallai::encode::{build_cnf, BreakMode, ConstraintKind};
use gallai::lattice::GridSpec;
use gallai::patterns::FamilyId;
use gallai::solve::{CdclSolver, CdclStatus, Limits};
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let k: u32 = args[1].parse().unwrap();
    let m: u32 = args[2].parse().unwrap();
    let split: usize = args[3].parse().unwrap();
    let inst = build_cnf(
        &GridSpec::square(m),
        FamilyId::RectSim(k),
        ConstraintKind::NotMonochromatic,
        BreakMode::FixOrigin,
    )
    .unwrap();
    let t = Instant::now();
    let mut total_conflicts = 0u64;
    let mut sat_found = false;
    // enumerate assignments of vars 1..=split (var 1 pinned false by FixOrigin)
    for cube in 0..(1u64 << (split - 1)) {
        let mut s = CdclSolver::new(inst.n_vars, 0);
        let mut ok = true;
        for c in &inst.clauses {
            if !s.add_clause(c) { ok = false; break; }
        }
        if ok {
            for v in 2..=split as i32 {
                let bit = cube >> (v - 2) & 1 == 1;
                if !s.add_clause(&[if bit { v } else { -v }]) { ok = false; break; }
            }
        }
        if ok {
            match s.solve(&Limits::default()) {
                CdclStatus::Sat => { sat_found = true; total_conflicts += s.stats.conflicts; break; }
                CdclStatus::Unsat => {}
                CdclStatus::Unknown => unreachable!(),
            }
        }
        total_conflicts += s.stats.conflicts;
    }
    println!(
        "k={k} m={m} split={split}: {} cubes, conflicts={total_conflicts}, {:?}, wall={:.2?}",
        1u64 << (split - 1),
        if sat_found { "SAT" } else { "UNSAT" },
        t.elapsed()
    );
}
