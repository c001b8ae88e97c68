use gallai::encode::{build_cnf, BreakMode, ConstraintKind};
use gallai::lattice::GridSpec;
use gallai::patterns::FamilyId;
use gallai::solve::{solve_embedded, SolverConfig};
use std::time::{Duration, Instant};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let k: u32 = args[1].parse().unwrap();
    let m: u32 = args[2].parse().unwrap();
    let secs: u64 = args[3].parse().unwrap();
    let mode = match args[4].as_str() {
        "lex" => BreakMode::LexLeader,
        "fix" => BreakMode::FixOrigin,
        _ => BreakMode::None,
    };
    let seed: u64 = args.get(5).map(|s| s.parse().unwrap()).unwrap_or(0);
    let inst = build_cnf(
        &GridSpec::square(m),
        FamilyId::RectSim(k),
        ConstraintKind::NotMonochromatic,
        mode,
    )
    .unwrap();
    let t = Instant::now();
    let config = SolverConfig {
        time_budget: Some(Duration::from_secs(secs)),
        seed,
        ..SolverConfig::default()
    };
    let out = solve_embedded(&inst, &config).unwrap();
    println!(
        "k={k} m={m} {:?} seed={seed}: {:?} vars={} clauses={} conflicts={} wall={:.2?}",
        mode, out.status, inst.n_vars, inst.clauses.len(), out.stats.conflicts, t.elapsed()
    );
}
