//! DIMACS CNF writing and parsing.
//!
//! Instances are written with a metadata comment so a generated file can be
//! parsed back into a full [`CnfInstance`]; foreign files without metadata
//! can still be read as raw clause lists. Output is byte-identical across
//! runs.

use std::io::Write;

use crate::encode::{self, BreakMode, Clause, CnfInstance, ConstraintKind};
use crate::lattice::{GridSpec, LatticeKind};
use crate::patterns::FamilyId;
use crate::{Error, Result};

fn metadata_line(
    grid: &GridSpec,
    family: FamilyId,
    constraint: ConstraintKind,
    break_mode: BreakMode,
) -> String {
    let k = family.k().map_or_else(|| "-".into(), |k| k.to_string());
    format!(
        "c kind={} m={} family={} k={} constraint={} break={}",
        grid.kind.name(),
        grid.m,
        family.name(),
        k,
        constraint.name(),
        break_mode.name()
    )
}

fn write_clause<W: Write>(w: &mut W, clause: &[i32]) -> std::io::Result<()> {
    let mut line = String::with_capacity(clause.len() * 4 + 2);
    for lit in clause {
        line.push_str(&lit.to_string());
        line.push(' ');
    }
    line.push('0');
    line.push('\n');
    w.write_all(line.as_bytes())
}

/// Writes a materialized instance.
pub fn write_dimacs<W: Write>(instance: &CnfInstance, w: &mut W) -> Result<()> {
    writeln!(
        w,
        "{}",
        metadata_line(
            &instance.grid,
            instance.family,
            instance.constraint,
            instance.break_mode
        )
    )?;
    writeln!(w, "p cnf {} {}", instance.n_vars, instance.clauses.len())?;
    for clause in &instance.clauses {
        write_clause(w, clause)?;
    }
    Ok(())
}

pub fn write_dimacs_string(instance: &CnfInstance) -> String {
    let mut buf = Vec::new();
    write_dimacs(instance, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("DIMACS output is ASCII")
}

/// Streams an instance of any size to `w` without materializing clauses.
/// Enumeration runs twice: once to size the header, once to emit. Returns
/// `(n_vars, n_clauses)`.
pub fn stream_dimacs<W: Write>(
    grid: &GridSpec,
    family: FamilyId,
    constraint: ConstraintKind,
    break_mode: BreakMode,
    w: &mut W,
) -> Result<(u32, u64)> {
    let (n_vars, n_clauses) = encode::stats(grid, family, constraint, break_mode)?;
    writeln!(w, "{}", metadata_line(grid, family, constraint, break_mode))?;
    writeln!(w, "p cnf {n_vars} {n_clauses}")?;
    let mut io_err: Option<std::io::Error> = None;
    encode::for_each_clause(grid, family, constraint, break_mode, |clause| {
        if io_err.is_none() {
            if let Err(e) = write_clause(w, clause) {
                io_err = Some(e);
            }
        }
    })?;
    match io_err {
        Some(e) => Err(e.into()),
        None => Ok((n_vars, n_clauses)),
    }
}

/// Raw parse: header and clauses only, metadata ignored.
pub fn parse_dimacs_raw(text: &str) -> Result<(u32, Vec<Clause>)> {
    let mut n_vars: Option<u32> = None;
    let mut declared = 0usize;
    let mut clauses: Vec<Clause> = Vec::new();
    let mut current: Clause = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("p ") {
            let mut it = rest.split_whitespace();
            if it.next() != Some("cnf") {
                return Err(Error::BadDimacs("expected `p cnf`".into()));
            }
            n_vars = Some(
                it.next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::BadDimacs("bad variable count".into()))?,
            );
            declared = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::BadDimacs("bad clause count".into()))?;
            continue;
        }
        if n_vars.is_none() {
            return Err(Error::BadDimacs("clause before `p cnf` header".into()));
        }
        for tok in line.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| Error::BadDimacs(format!("bad literal {tok:?}")))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                if lit.unsigned_abs() > n_vars.unwrap() {
                    return Err(Error::BadDimacs(format!(
                        "literal {lit} exceeds variable count"
                    )));
                }
                current.push(lit);
            }
        }
    }
    if !current.is_empty() {
        return Err(Error::BadDimacs("unterminated clause".into()));
    }
    let n_vars = n_vars.ok_or_else(|| Error::BadDimacs("missing `p cnf` header".into()))?;
    if clauses.len() != declared {
        return Err(Error::BadDimacs(format!(
            "header declares {declared} clauses, found {}",
            clauses.len()
        )));
    }
    Ok((n_vars, clauses))
}

fn parse_metadata(text: &str) -> Result<(GridSpec, FamilyId, ConstraintKind, BreakMode)> {
    for line in text.lines() {
        if !line.starts_with("c ") {
            continue;
        }
        let mut kind = None;
        let mut m = None;
        let mut family = None;
        let mut k = None;
        let mut constraint = None;
        let mut break_mode = None;
        for tok in line[2..].split_whitespace() {
            let Some((key, value)) = tok.split_once('=') else {
                continue;
            };
            match key {
                "kind" => kind = LatticeKind::parse(value),
                "m" => m = value.parse::<u32>().ok(),
                "family" => family = Some(value.to_string()),
                "k" => k = value.parse::<u32>().ok(),
                "constraint" => constraint = ConstraintKind::parse(value),
                "break" => break_mode = BreakMode::parse(value),
                _ => {}
            }
        }
        if let (Some(kind), Some(m), Some(name), Some(constraint), Some(break_mode)) =
            (kind, m, family, constraint, break_mode)
        {
            let family = FamilyId::parse(&name, k)?;
            return Ok((GridSpec::new(kind, m)?, family, constraint, break_mode));
        }
    }
    Err(Error::MissingMetadata)
}

/// Parses a generated DIMACS file back into a full instance. The metadata
/// comment must be present; other comments are ignored.
pub fn parse_dimacs(text: &str) -> Result<CnfInstance> {
    let (grid, family, constraint, break_mode) = parse_metadata(text)?;
    let (n_vars, clauses) = parse_dimacs_raw(text)?;
    Ok(CnfInstance {
        n_vars,
        clauses,
        grid,
        family,
        constraint,
        break_mode,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encode::build_cnf;

    #[test]
    fn trivial_output() {
        let inst = build_cnf(
            &GridSpec::square(2),
            FamilyId::SqAxis,
            ConstraintKind::NotMonochromatic,
            BreakMode::None,
        )
        .unwrap();
        let text = write_dimacs_string(&inst);
        assert!(text.contains("p cnf 4 2"));
        assert!(text.contains("1 2 3 4 0\n"));
        assert!(text.contains("-1 -2 -3 -4 0\n"));
    }

    #[test]
    fn empty_family_header() {
        let inst = build_cnf(
            &GridSpec::square(1),
            FamilyId::SqAxis,
            ConstraintKind::NotMonochromatic,
            BreakMode::None,
        )
        .unwrap();
        assert!(write_dimacs_string(&inst).contains("p cnf 1 0"));
    }

    #[test]
    fn table_header() {
        let inst = build_cnf(
            &GridSpec::square(27),
            FamilyId::RectHom(2),
            ConstraintKind::NotMonochromatic,
            BreakMode::FixOrigin,
        )
        .unwrap();
        assert!(write_dimacs_string(&inst).contains("p cnf 729 7489"));
    }

    #[test]
    fn round_trip() {
        for (family, mode) in [
            (FamilyId::SqAxis, BreakMode::None),
            (FamilyId::SqAll, BreakMode::FixOrigin),
            (FamilyId::RectHomBoth(2), BreakMode::LexLeader),
        ] {
            let inst = build_cnf(
                &GridSpec::square(4),
                family,
                ConstraintKind::NotMonochromatic,
                mode,
            )
            .unwrap();
            let text = write_dimacs_string(&inst);
            let back = parse_dimacs(&text).unwrap();
            assert_eq!(back, inst);
            // byte-identical re-serialization
            assert_eq!(write_dimacs_string(&back), text);
        }
    }

    #[test]
    fn stream_matches_materialized() {
        let grid = GridSpec::square(6);
        let inst = build_cnf(
            &grid,
            FamilyId::SqAll,
            ConstraintKind::NotMonochromatic,
            BreakMode::LexLeader,
        )
        .unwrap();
        let materialized = write_dimacs_string(&inst);
        let mut streamed = Vec::new();
        stream_dimacs(
            &grid,
            FamilyId::SqAll,
            ConstraintKind::NotMonochromatic,
            BreakMode::LexLeader,
            &mut streamed,
        )
        .unwrap();
        assert_eq!(String::from_utf8(streamed).unwrap(), materialized);
    }

    #[test]
    fn raw_parse_rejects_garbage() {
        assert!(parse_dimacs_raw("p cnf 2 1\n1 -2 0\n").is_ok());
        assert!(parse_dimacs_raw("p cnf 2 2\n1 -2 0\n").is_err());
        assert!(parse_dimacs_raw("p cnf 2 1\n1 -3 0\n").is_err());
        assert!(parse_dimacs_raw("p cnf 2 1\n1 -2\n").is_err());
        assert!(parse_dimacs_raw("1 2 0\n").is_err());
        assert!(matches!(parse_dimacs("p cnf 1 0\n"), Err(Error::MissingMetadata)));
    }
}
