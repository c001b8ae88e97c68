use gallai::encode::{build_cnf, BreakMode, ConstraintKind};
use gallai::lattice::{Cell, GridSpec};
use gallai::patterns::FamilyId;
use gallai::solve::{CdclSolver, CdclStatus, Limits};
use std::time::{Duration, Instant};

// all 8 elements of D8 as (x,y) maps
fn d8(m: i32) -> Vec<Box<dyn Fn(Cell) -> Cell>> {
    let rot = move |c: Cell| Cell::xy(m - 1 - c.y, c.x);
    let mut out: Vec<Box<dyn Fn(Cell) -> Cell>> = Vec::new();
    for r in 0..4 {
        for s in [false, true] {
            out.push(Box::new(move |mut c: Cell| {
                if s {
                    c = Cell::xy(c.y, c.x);
                }
                for _ in 0..r {
                    c = rot(c);
                }
                c
            }));
        }
    }
    out
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let k: u32 = args[1].parse().unwrap();
    let m: u32 = args[2].parse().unwrap();
    let secs: u64 = args[3].parse().unwrap();
    let grid = GridSpec::square(m);
    let inst = build_cnf(&grid, FamilyId::RectSim(k), ConstraintKind::NotMonochromatic, BreakMode::FixOrigin).unwrap();
    let n_cells = grid.cell_count() as i32;

    let mut clauses: Vec<Vec<i32>> = inst.clauses.clone();
    let mut next_aux = n_cells;
    for g in d8(m as i32) {
        for flip in [false, true] {
            // permutation as literal map: y_j = (±) x_{π(j)}
            let perm: Vec<i32> = grid
                .cells()
                .iter()
                .map(|c| grid.index_of(g(*c)).unwrap().get() as i32)
                .collect();
            let lexpairs: Vec<(i32, i32)> = (1..=n_cells)
                .map(|j| {
                    let y = if flip { -perm[(j - 1) as usize] } else { perm[(j - 1) as usize] };
                    (j, y)
                })
                .filter(|&(x, y)| x != y)
                .collect();
            if lexpairs.is_empty() {
                continue;
            }
            let r = lexpairs.len();
            let mut prev_e = 0i32;
            for (t, &(x, y)) in lexpairs.iter().enumerate() {
                if t == 0 {
                    clauses.push(vec![-x, y]);
                } else {
                    clauses.push(vec![-prev_e, -x, y]);
                }
                if t + 1 < r.min(usize::MAX) && t + 1 < r {
                    next_aux += 1;
                    let e = next_aux;
                    if t == 0 {
                        clauses.push(vec![-e, -x, y]);
                        clauses.push(vec![-e, x, -y]);
                        clauses.push(vec![-x, -y, e]);
                        clauses.push(vec![x, y, e]);
                    } else {
                        clauses.push(vec![-e, prev_e]);
                        clauses.push(vec![-e, -x, y]);
                        clauses.push(vec![-e, x, -y]);
                        clauses.push(vec![-prev_e, -x, -y, e]);
                        clauses.push(vec![-prev_e, x, y, e]);
                    }
                    prev_e = e;
                }
            }
        }
    }

    let t = Instant::now();
    let mut s = CdclSolver::new(next_aux as u32, 0);
    let mut root_unsat = false;
    for c in &clauses {
        if !s.add_clause(c) {
            root_unsat = true;
            break;
        }
    }
    let status = if root_unsat {
        CdclStatus::Unsat
    } else {
        s.solve(&Limits { deadline: Some(t + Duration::from_secs(secs)), max_conflicts: None })
    };
    println!(
        "k={k} m={m} full-sym: {:?} vars={} clauses={} conflicts={} wall={:.2?}",
        status, next_aux, clauses.len(), s.stats.conflicts, t.elapsed()
    );
}
