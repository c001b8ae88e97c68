//! Tools for studying 2-colorings of finite grids that avoid monochromatic
//! configurations: equilateral triangles on the triangular lattice, squares
//! and rectangles on the square lattice, regular hexagons in a parity-coded
//! window, and axis-parallel cubes in three dimensions.
//!
//! The crate covers the whole pipeline:
//!
//! * [`lattice`] — grid geometries and the cell ↔ DIMACS-variable bijection,
//! * [`patterns`] — enumeration of the forbidden configuration families,
//! * [`encode`] — CNF compilation with optional symmetry breaking,
//! * [`dimacs`] — DIMACS CNF reading and writing,
//! * [`solve`] — an embedded CDCL solver, an external-solver adapter,
//!   exhaustive model counting and GF(2) elimination for parity systems,
//! * [`oracle`] — a solver-independent verifier for candidate colorings,
//! * [`explore`] — layer-by-layer extension search and the minimal-UNSAT
//!   grid-size driver,
//! * [`symmetry`] — dihedral group actions and orbit classification,
//! * [`render`] — ASCII and SVG drawings of colorings,
//! * [`fixtures`] — bundled reference colorings.

pub mod dimacs;
pub mod encode;
mod error;
pub mod explore;
pub mod fixtures;
pub mod lattice;
pub mod oracle;
pub mod patterns;
pub mod render;
pub mod solve;
pub mod symmetry;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
