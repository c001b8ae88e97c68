//! Adapter for external SAT solvers speaking the standard competition
//! protocol: DIMACS on disk, `s SATISFIABLE` / `s UNSATISFIABLE` status
//! lines or exit codes 10/20, `v `-prefixed model literals terminated by 0,
//! optional DRAT proof written to a second path.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::{Child, Command, Stdio};
use std::time::{Duration, Instant};

use crate::dimacs;
use crate::encode::CnfInstance;
use crate::solve::{SolveOutcome, SolveStats, SolverConfig, Status};
use crate::{Error, Result};

/// Splits the command template and substitutes `{cnf}` / `{proof}`.
/// Without placeholders the paths are appended: `<cmd> <cnf> [<proof>]`.
fn build_argv(template: &str, cnf: &Path, proof: Option<&Path>) -> Result<Vec<String>> {
    let mut argv: Vec<String> = template.split_whitespace().map(str::to_string).collect();
    if argv.is_empty() {
        return Err(Error::MissingExecutable("<empty command>".into()));
    }
    let mut saw_cnf = false;
    let mut saw_proof = false;
    for arg in &mut argv {
        if arg.contains("{cnf}") {
            *arg = arg.replace("{cnf}", &cnf.to_string_lossy());
            saw_cnf = true;
        }
        if arg.contains("{proof}") {
            match proof {
                Some(p) => *arg = arg.replace("{proof}", &p.to_string_lossy()),
                None => return Err(Error::MalformedOutput(
                    "command template wants {proof} but no proof was requested".into(),
                )),
            }
            saw_proof = true;
        }
    }
    if !saw_cnf {
        argv.push(cnf.to_string_lossy().into_owned());
    }
    if let Some(p) = proof {
        if !saw_proof {
            argv.push(p.to_string_lossy().into_owned());
        }
    }
    Ok(argv)
}

fn wait_with_deadline(child: &mut Child, deadline: Option<Instant>) -> Result<Option<i32>> {
    loop {
        if let Some(status) = child.try_wait()? {
            return Ok(status.code());
        }
        if let Some(d) = deadline {
            if Instant::now() >= d {
                let _ = child.kill();
                let _ = child.wait();
                return Ok(None); // timed out
            }
        }
        std::thread::sleep(Duration::from_millis(10));
    }
}

struct ParsedOutput {
    status: Option<Status>,
    values: Vec<i32>,
}

fn parse_solver_output(text: &str) -> ParsedOutput {
    let mut status = None;
    let mut values = Vec::new();
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("s ") {
            status = match rest.trim() {
                "SATISFIABLE" => Some(Status::Sat),
                "UNSATISFIABLE" => Some(Status::Unsat),
                _ => Some(Status::Unknown),
            };
        } else if let Some(rest) = line.strip_prefix("v ") {
            for tok in rest.split_whitespace() {
                if let Ok(lit) = tok.parse::<i32>() {
                    if lit != 0 {
                        values.push(lit);
                    }
                }
            }
        }
    }
    ParsedOutput { status, values }
}

/// Runs the configured external command on the instance.
pub fn solve_external(instance: &CnfInstance, config: &SolverConfig) -> Result<SolveOutcome> {
    let command = match &config.engine {
        super::Engine::External(cmd) => cmd.clone(),
        super::Engine::Embedded => {
            return Err(Error::MissingExecutable(
                "solver config selects the embedded engine".into(),
            ))
        }
    };

    let dir = tempfile::tempdir()?;
    let cnf_path = dir.path().join("instance.cnf");
    {
        let mut f = std::fs::File::create(&cnf_path)?;
        dimacs::write_dimacs(instance, &mut f)?;
    }
    let proof_path: Option<PathBuf> = if config.drat_requested {
        match &config.proof_path {
            Some(p) => Some(p.clone()),
            None => {
                // keep the proof outside the scratch dir so it survives
                let f = tempfile::Builder::new()
                    .prefix("proof-")
                    .suffix(".drat")
                    .tempfile_in(std::env::temp_dir())?;
                Some(f.into_temp_path().keep().map_err(|e| Error::Io(e.error))?)
            }
        }
    } else {
        None
    };

    let argv = build_argv(&command, &cnf_path, proof_path.as_deref())?;
    let start = Instant::now();
    let deadline = config.time_budget.map(|d| start + d);

    let mut child = Command::new(&argv[0])
        .args(&argv[1..])
        .stdin(Stdio::null())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .map_err(|e| {
            if e.kind() == std::io::ErrorKind::NotFound {
                Error::MissingExecutable(argv[0].clone())
            } else {
                Error::Io(e)
            }
        })?;

    // drain stdout on a separate thread so the child never blocks on a
    // full pipe while we poll for the deadline
    let mut stdout = child.stdout.take().expect("stdout was piped");
    let reader = std::thread::spawn(move || {
        let mut buf = String::new();
        let _ = stdout.read_to_string(&mut buf);
        buf
    });
    let exit_code = wait_with_deadline(&mut child, deadline)?;
    let output = reader.join().unwrap_or_default();
    let wall = start.elapsed();
    let stats = SolveStats { wall, ..SolveStats::default() };

    let Some(exit_code) = exit_code else {
        return Ok(SolveOutcome {
            status: Status::Unknown,
            witness: None,
            proof_path: None,
            stats,
        });
    };

    let parsed = parse_solver_output(&output);
    let status = match parsed.status {
        Some(s) => s,
        None => match exit_code {
            10 => Status::Sat,
            20 => Status::Unsat,
            0 => return Err(Error::MalformedOutput("no status line in solver output".into())),
            code => return Err(Error::SolverCrash(format!("exit code {code}, no status line"))),
        },
    };

    match status {
        Status::Sat => {
            // missing variables default to false, then the witness is
            // checked against every clause before we trust it
            let mut assignment: Vec<i32> =
                (1..=instance.n_vars as i32).map(|v| -v).collect();
            for lit in parsed.values {
                let var = lit.unsigned_abs();
                if var == 0 || var > instance.n_vars {
                    return Err(Error::MalformedOutput(format!(
                        "model literal {lit} out of range"
                    )));
                }
                assignment[(var - 1) as usize] = lit;
            }
            if !super::assignment_satisfies(&assignment, &instance.clauses) {
                return Err(Error::MalformedOutput(
                    "reported model does not satisfy the instance".into(),
                ));
            }
            Ok(SolveOutcome {
                status: Status::Sat,
                witness: Some(assignment),
                proof_path: None,
                stats,
            })
        }
        Status::Unsat => Ok(SolveOutcome {
            status: Status::Unsat,
            witness: None,
            proof_path,
            stats,
        }),
        Status::Unknown => Ok(SolveOutcome {
            status: Status::Unknown,
            witness: None,
            proof_path: None,
            stats,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::path::PathBuf;

    #[test]
    fn argv_substitution() {
        let cnf = PathBuf::from("/tmp/in.cnf");
        let proof = PathBuf::from("/tmp/out.drat");
        assert_eq!(
            build_argv("kissat -q {cnf}", &cnf, None).unwrap(),
            vec!["kissat", "-q", "/tmp/in.cnf"]
        );
        assert_eq!(
            build_argv("cadical {cnf} {proof}", &cnf, Some(&proof)).unwrap(),
            vec!["cadical", "/tmp/in.cnf", "/tmp/out.drat"]
        );
        // bare command gets the standard `<cnf> [<proof>]` suffix
        assert_eq!(
            build_argv("minisat", &cnf, Some(&proof)).unwrap(),
            vec!["minisat", "/tmp/in.cnf", "/tmp/out.drat"]
        );
    }

    #[test]
    fn output_parsing() {
        let out = parse_solver_output("c comment\ns SATISFIABLE\nv 1 -2 3\nv -4 0\n");
        assert_eq!(out.status, Some(Status::Sat));
        assert_eq!(out.values, vec![1, -2, 3, -4]);
        let out = parse_solver_output("s UNSATISFIABLE\n");
        assert_eq!(out.status, Some(Status::Unsat));
        assert!(parse_solver_output("nothing here").status.is_none());
    }
}
