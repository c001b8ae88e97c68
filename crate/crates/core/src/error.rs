use crate::lattice::{Cell, GridSpec, LatticeKind};
use crate::oracle::Coloring;

/// Crate-wide error type. Variants are grouped by the subsystem that
/// produces them.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    // lattice
    #[error("grid edge parameter must be at least 1")]
    EmptyGrid,
    #[error("cell {cell:?} is not a valid cell of {grid:?}")]
    InvalidCell { grid: GridSpec, cell: Cell },
    #[error("cell index {idx} out of range 1..={max}")]
    IndexOutOfRange { idx: u32, max: u32 },

    // patterns / encode
    #[error("unknown family name {0:?}")]
    UnknownFamily(String),
    #[error("family {family} lives on {expected:?} grids, got {got:?}")]
    KindMismatch {
        family: String,
        expected: LatticeKind,
        got: LatticeKind,
    },
    #[error("rectangle ratio k must be at least 2, got {0}")]
    InvalidRatio(u32),
    #[error("constraint {constraint} requires 4-vertex configurations, family {family} has arity {arity}")]
    ArityMismatch {
        constraint: String,
        family: String,
        arity: usize,
    },
    #[error("lex-leader breaking is only defined for square and triangular grids, got {0:?}")]
    LexUnsupported(LatticeKind),

    // dimacs / witnesses
    #[error("malformed DIMACS: {0}")]
    BadDimacs(String),
    #[error("DIMACS file carries no instance metadata comment")]
    MissingMetadata,
    #[error("assignment leaves variable {var} unassigned")]
    IncompleteAssignment { var: u32 },

    // coloring files
    #[error("bad coloring header: {0}")]
    BadHeader(String),
    #[error("coloring row {row} has {got} cells, expected {expected}")]
    RowLengthMismatch { row: usize, got: usize, expected: usize },
    #[error("unexpected character {ch:?} in coloring row {row}")]
    BadCharacter { row: usize, ch: char },

    // solving
    #[error("external solver executable not found: {0}")]
    MissingExecutable(String),
    #[error("external solver crashed: {0}")]
    SolverCrash(String),
    #[error("cannot parse external solver output: {0}")]
    MalformedOutput(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    // explore
    #[error("extension search supports square and triangular grids, got {0:?}")]
    UnsupportedKind(LatticeKind),
    #[error("search limit m = {limit} reached without an unsatisfiable size")]
    LimitReached {
        limit: u32,
        last_sat_witness: Box<Coloring>,
    },
    #[error("solver returned Unknown at m = {m}; result inconclusive")]
    SolverUnknown { m: u32 },

    // symmetry
    #[error("colorings come from different grids")]
    MixedGrids,
    #[error("group element for m = {element_m} applied to a coloring of m = {coloring_m}")]
    SizeMismatch { element_m: u32, coloring_m: u32 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
