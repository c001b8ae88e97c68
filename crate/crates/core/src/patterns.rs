//! Enumeration of the forbidden configuration families.
//!
//! A family is a set of vertex sets (triangles, squares, rectangles,
//! hexagons or cubes) contained in a grid. Axis-parallel families are
//! produced by explicit range scans that already emit each configuration
//! exactly once in lexicographic order of the sorted vertex list. Skew
//! families (`TriAll`, `SqAll`, `RectSim`) are scanned over all base points
//! and offset vectors `(a, b)`; the same vertex set is generated once per
//! base vertex, so a configuration is emitted only when the scan's base
//! point is the least vertex of the set. [`count`] never materializes
//! configuration lists; [`enumerate`] buffers skew and union families to
//! deliver the sorted order.

use std::fmt;
use std::io::Write;

use crate::lattice::{Cell, CellIndex, GridSpec, LatticeKind};
use crate::{Error, Result};

/// Identifier of a configuration family, mirroring the families
/// E, Δ, ∇, F, □, A^(k), B^(k), C^(k), ⬡ and the axis-parallel cubes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyId {
    /// All equilateral triangles in the triangular grid (E_m).
    TriAll,
    /// Axis-parallel upward triangles (Δ_m).
    TriUp,
    /// Axis-parallel downward triangles (∇_m).
    TriDown,
    /// Δ_m ∪ ∇_m.
    TriUpDown,
    /// All squares, horizontal or skew (F_m).
    SqAll,
    /// Axis-parallel squares (□_m).
    SqAxis,
    /// Homothetic images of the 1×k rectangle, vertical long side (A_m^(k)).
    RectHom(u32),
    /// Homothetic images of the rotated k×1 rectangle (B_m^(k)).
    RectHomRot(u32),
    /// A_m^(k) ∪ B_m^(k).
    RectHomBoth(u32),
    /// All rectangles similar to 1×k in arbitrary orientation (C_m^(k)).
    RectSim(u32),
    /// Regular hexagons in the parity-coded window (⬡_m).
    Hexagon,
    /// Axis-parallel cubes in the cubic grid.
    Cube,
}

impl FamilyId {
    /// Lattice kind the family is defined on.
    pub fn kind(self) -> LatticeKind {
        match self {
            FamilyId::TriAll | FamilyId::TriUp | FamilyId::TriDown | FamilyId::TriUpDown => {
                LatticeKind::Triangular
            }
            FamilyId::SqAll
            | FamilyId::SqAxis
            | FamilyId::RectHom(_)
            | FamilyId::RectHomRot(_)
            | FamilyId::RectHomBoth(_)
            | FamilyId::RectSim(_) => LatticeKind::Square2D,
            FamilyId::Hexagon => LatticeKind::HexWindow,
            FamilyId::Cube => LatticeKind::Cubic,
        }
    }

    /// Number of vertices per configuration.
    pub fn arity(self) -> usize {
        match self {
            FamilyId::TriAll | FamilyId::TriUp | FamilyId::TriDown | FamilyId::TriUpDown => 3,
            FamilyId::Hexagon => 6,
            FamilyId::Cube => 8,
            _ => 4,
        }
    }

    /// Side-ratio parameter of the rectangle families.
    pub fn k(self) -> Option<u32> {
        match self {
            FamilyId::RectHom(k)
            | FamilyId::RectHomRot(k)
            | FamilyId::RectHomBoth(k)
            | FamilyId::RectSim(k) => Some(k),
            _ => None,
        }
    }

    /// Bare family slug, without the k parameter.
    pub fn name(self) -> &'static str {
        match self {
            FamilyId::TriAll => "tri-all",
            FamilyId::TriUp => "tri-up",
            FamilyId::TriDown => "tri-down",
            FamilyId::TriUpDown => "tri-up-down",
            FamilyId::SqAll => "sq-all",
            FamilyId::SqAxis => "sq-axis",
            FamilyId::RectHom(_) => "rect-hom",
            FamilyId::RectHomRot(_) => "rect-hom-rot",
            FamilyId::RectHomBoth(_) => "rect-hom-both",
            FamilyId::RectSim(_) => "rect-sim",
            FamilyId::Hexagon => "hexagon",
            FamilyId::Cube => "cube",
        }
    }

    /// Builds a family from its slug and optional k parameter.
    pub fn parse(name: &str, k: Option<u32>) -> Result<FamilyId> {
        let need_k = || k.ok_or(Error::InvalidRatio(0));
        let fam = match name {
            "tri-all" => FamilyId::TriAll,
            "tri-up" => FamilyId::TriUp,
            "tri-down" => FamilyId::TriDown,
            "tri-up-down" => FamilyId::TriUpDown,
            "sq-all" => FamilyId::SqAll,
            "sq-axis" => FamilyId::SqAxis,
            "rect-hom" => FamilyId::RectHom(need_k()?),
            "rect-hom-rot" => FamilyId::RectHomRot(need_k()?),
            "rect-hom-both" => FamilyId::RectHomBoth(need_k()?),
            "rect-sim" => FamilyId::RectSim(need_k()?),
            "hexagon" => FamilyId::Hexagon,
            "cube" => FamilyId::Cube,
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        if let Some(k) = fam.k() {
            if k < 2 {
                return Err(Error::InvalidRatio(k));
            }
        }
        Ok(fam)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k() {
            Some(k) => write!(f, "{}(k={})", self.name(), k),
            None => f.write_str(self.name()),
        }
    }
}

/// One forbidden figure: a strictly increasing list of cell indices plus
/// the generating parameters kept as metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub vertices: Vec<CellIndex>,
    pub family: FamilyId,
    pub params: Vec<i32>,
}

fn check_family(grid: &GridSpec, family: FamilyId) -> Result<()> {
    if family.kind() != grid.kind {
        return Err(Error::KindMismatch {
            family: family.to_string(),
            expected: family.kind(),
            got: grid.kind,
        });
    }
    if let Some(k) = family.k() {
        if k < 2 {
            return Err(Error::InvalidRatio(k));
        }
    }
    Ok(())
}

/// Canonical cell order: by z, then y, then x (equals index order).
fn cell_key(c: &Cell) -> (i32, i32, i32) {
    (c.z, c.y, c.x)
}

/// Streaming scan. Sorted-order guarantee only for non-skew, non-union
/// families; every configuration is visited exactly once in all cases.
/// The callback returns `false` to stop early.
fn raw_scan(
    grid: &GridSpec,
    family: FamilyId,
    f: &mut dyn FnMut(&Configuration) -> bool,
) -> Result<()> {
    let m = grid.m as i32;
    let mut cfg = Configuration {
        vertices: Vec::with_capacity(family.arity()),
        family,
        params: Vec::with_capacity(4),
    };
    // Rebuilds the scratch configuration; cells must already be sorted.
    macro_rules! emit {
        ($cells:expr, $params:expr) => {{
            cfg.vertices.clear();
            for c in $cells {
                cfg.vertices.push(grid.index_of_unchecked(c));
            }
            debug_assert!(cfg.vertices.windows(2).all(|w| w[0] < w[1]));
            cfg.params.clear();
            cfg.params.extend_from_slice(&$params);
            if !f(&cfg) {
                return Ok(());
            }
        }};
    }

    match family {
        FamilyId::TriUp => {
            // apex (p,q), base level q+a: {(p,q), (p,q+a), (p+a,q+a)}
            for q in 0..m {
                for p in 0..=q {
                    for a in 1..=(m - 1 - q) {
                        emit!(
                            [Cell::xy(p, q), Cell::xy(p, q + a), Cell::xy(p + a, q + a)],
                            [p, q + a, a]
                        );
                    }
                }
            }
        }
        FamilyId::TriDown => {
            // top edge on level q, apex (p+a, q+a): {(p,q), (p+a,q), (p+a,q+a)}
            for q in 0..m {
                for p in 0..=q {
                    let max_a = (q - p).min(m - 1 - q);
                    for a in 1..=max_a {
                        emit!(
                            [Cell::xy(p, q), Cell::xy(p + a, q), Cell::xy(p + a, q + a)],
                            [p + a, q + a, a]
                        );
                    }
                }
            }
        }
        FamilyId::TriUpDown => {
            raw_scan(grid, FamilyId::TriUp, f)?;
            raw_scan(grid, FamilyId::TriDown, f)?;
        }
        FamilyId::TriAll => {
            // {(i,j), (i-a,j+b), (i+b,j+a+b)} over all (a,b) != (0,0);
            // emitted when (i,j) is the least vertex of the set.
            let r = m - 1;
            for j in 0..m {
                for i in 0..=j {
                    let base = Cell::xy(i, j);
                    for a in -r..=r {
                        for b in -r..=r {
                            if a == 0 && b == 0 {
                                continue;
                            }
                            let v1 = Cell::xy(i - a, j + b);
                            let v2 = Cell::xy(i + b, j + a + b);
                            if !grid.contains(v1) || !grid.contains(v2) {
                                continue;
                            }
                            if cell_key(&base) > cell_key(&v1) || cell_key(&base) > cell_key(&v2) {
                                continue;
                            }
                            let (lo, hi) = if cell_key(&v1) < cell_key(&v2) {
                                (v1, v2)
                            } else {
                                (v2, v1)
                            };
                            emit!([base, lo, hi], [i, j, a, b]);
                        }
                    }
                }
            }
        }
        FamilyId::SqAxis => {
            for j in 0..m {
                for i in 0..m {
                    for a in 1..=(m - 1 - i).min(m - 1 - j) {
                        emit!(
                            [
                                Cell::xy(i, j),
                                Cell::xy(i + a, j),
                                Cell::xy(i, j + a),
                                Cell::xy(i + a, j + a)
                            ],
                            [i, j, a]
                        );
                    }
                }
            }
        }
        FamilyId::SqAll => {
            // {(i,j), (i+b,j-a), (i+a+b,j+b-a), (i+a,j+b)}; least-vertex rule.
            let r = m - 1;
            for j in 0..m {
                for i in 0..m {
                    let base = Cell::xy(i, j);
                    for a in -r..=r {
                        for b in -r..=r {
                            if a == 0 && b == 0 {
                                continue;
                            }
                            let vs = [
                                Cell::xy(i + b, j - a),
                                Cell::xy(i + a + b, j + b - a),
                                Cell::xy(i + a, j + b),
                            ];
                            if vs.iter().any(|v| !grid.contains(*v)) {
                                continue;
                            }
                            if vs.iter().any(|v| cell_key(v) < cell_key(&base)) {
                                continue;
                            }
                            let mut all = [base, vs[0], vs[1], vs[2]];
                            all.sort_by_key(cell_key);
                            emit!(all, [i, j, a, b]);
                        }
                    }
                }
            }
        }
        FamilyId::RectHom(k) => {
            let k = k as i32;
            for j in 0..m {
                for i in 0..m {
                    for d in 1..=(m - 1 - i).min((m - 1 - j) / k) {
                        emit!(
                            [
                                Cell::xy(i, j),
                                Cell::xy(i + d, j),
                                Cell::xy(i, j + k * d),
                                Cell::xy(i + d, j + k * d)
                            ],
                            [i, j, d]
                        );
                    }
                }
            }
        }
        FamilyId::RectHomRot(k) => {
            let k = k as i32;
            for j in 0..m {
                for i in 0..m {
                    for d in 1..=((m - 1 - i) / k).min(m - 1 - j) {
                        emit!(
                            [
                                Cell::xy(i, j),
                                Cell::xy(i + k * d, j),
                                Cell::xy(i, j + d),
                                Cell::xy(i + k * d, j + d)
                            ],
                            [i, j, d]
                        );
                    }
                }
            }
        }
        FamilyId::RectHomBoth(k) => {
            raw_scan(grid, FamilyId::RectHom(k), f)?;
            raw_scan(grid, FamilyId::RectHomRot(k), f)?;
        }
        FamilyId::RectSim(k) => {
            // u = (a,b), v = (kb,-ka). Only the two corners of one diagonal
            // admit a parametrization (v must be the long side rotated
            // clockwise from u), so a rectangle is generated exactly twice;
            // emit at the lesser of the two admissible corners.
            let k = k as i32;
            let r = m - 1;
            for y in 0..m {
                for x in 0..m {
                    let base = Cell::xy(x, y);
                    for a in -r..=r {
                        for b in -r..=r {
                            if a == 0 && b == 0 {
                                continue;
                            }
                            let vs = [
                                Cell::xy(x + a, y + b),
                                Cell::xy(x + k * b, y - k * a),
                                Cell::xy(x + a + k * b, y + b - k * a),
                            ];
                            if vs.iter().any(|v| !grid.contains(*v)) {
                                continue;
                            }
                            if cell_key(&base) > cell_key(&vs[2]) {
                                continue;
                            }
                            let mut all = [base, vs[0], vs[1], vs[2]];
                            all.sort_by_key(cell_key);
                            emit!(all, [x, y, a, b]);
                        }
                    }
                }
            }
        }
        FamilyId::Hexagon => {
            // H(x,y,s): {(x,y),(x+2s,y),(x-s,y+s),(x+3s,y+s),(x,y+2s),(x+2s,y+2s)}
            for y in 0..m {
                for t in 0..m {
                    let x = (y % 2) + 2 * t;
                    let s_max = ((m - 1 - y) / 2).min(x).min((2 * m - 1 - x) / 3);
                    for s in 1..=s_max {
                        emit!(
                            [
                                Cell::xy(x, y),
                                Cell::xy(x + 2 * s, y),
                                Cell::xy(x - s, y + s),
                                Cell::xy(x + 3 * s, y + s),
                                Cell::xy(x, y + 2 * s),
                                Cell::xy(x + 2 * s, y + 2 * s)
                            ],
                            [x, y, s]
                        );
                    }
                }
            }
        }
        FamilyId::Cube => {
            for z in 0..m {
                for y in 0..m {
                    for x in 0..m {
                        for s in 1..=(m - 1 - x.max(y).max(z)) {
                            emit!(
                                [
                                    Cell::xyz(x, y, z),
                                    Cell::xyz(x + s, y, z),
                                    Cell::xyz(x, y + s, z),
                                    Cell::xyz(x + s, y + s, z),
                                    Cell::xyz(x, y, z + s),
                                    Cell::xyz(x + s, y, z + s),
                                    Cell::xyz(x, y + s, z + s),
                                    Cell::xyz(x + s, y + s, z + s)
                                ],
                                [x, y, z, s]
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn is_buffered(family: FamilyId) -> bool {
    matches!(
        family,
        FamilyId::TriAll
            | FamilyId::SqAll
            | FamilyId::RectSim(_)
            | FamilyId::TriUpDown
            | FamilyId::RectHomBoth(_)
    )
}

/// Visits every configuration of the family exactly once, sorted
/// lexicographically by vertex list. The callback returns `false` to stop.
pub fn for_each(
    grid: &GridSpec,
    family: FamilyId,
    mut f: impl FnMut(&Configuration) -> bool,
) -> Result<()> {
    check_family(grid, family)?;
    if !is_buffered(family) {
        return raw_scan(grid, family, &mut f);
    }
    let mut buf: Vec<(Vec<CellIndex>, Vec<i32>)> = Vec::new();
    raw_scan(grid, family, &mut |cfg| {
        buf.push((cfg.vertices.clone(), cfg.params.clone()));
        true
    })?;
    buf.sort();
    debug_assert!(buf.windows(2).all(|w| w[0].0 != w[1].0));
    let mut cfg = Configuration {
        vertices: Vec::new(),
        family,
        params: Vec::new(),
    };
    for (vertices, params) in buf {
        cfg.vertices = vertices;
        cfg.params = params;
        if !f(&cfg) {
            break;
        }
    }
    Ok(())
}

/// Materializes the family as a sorted, deduplicated list.
pub fn enumerate(grid: &GridSpec, family: FamilyId) -> Result<Vec<Configuration>> {
    let mut out = Vec::new();
    for_each(grid, family, |cfg| {
        out.push(cfg.clone());
        true
    })?;
    Ok(out)
}

/// Number of configurations, computed without materializing the list.
pub fn count(grid: &GridSpec, family: FamilyId) -> Result<u64> {
    check_family(grid, family)?;
    let mut n = 0u64;
    raw_scan(grid, family, &mut |_| {
        n += 1;
        true
    })?;
    Ok(n)
}

/// Writes the family in the line-oriented text format: a header comment,
/// then one configuration per line as space-separated sorted indices.
pub fn write_configs<W: Write>(grid: &GridSpec, family: FamilyId, w: &mut W) -> Result<()> {
    let k = match family.k() {
        Some(k) => k.to_string(),
        None => "-".to_string(),
    };
    writeln!(
        w,
        "# family={} k={} kind={} m={}",
        family.name(),
        k,
        grid.kind.name(),
        grid.m
    )?;
    let mut io_err = None;
    for_each(grid, family, |cfg| {
        let mut line = String::new();
        for (i, v) in cfg.vertices.iter().enumerate() {
            if i > 0 {
                line.push(' ');
            }
            line.push_str(&v.get().to_string());
        }
        if let Err(e) = writeln!(w, "{line}") {
            io_err = Some(e);
            return false;
        }
        true
    })?;
    match io_err {
        Some(e) => Err(e.into()),
        None => Ok(()),
    }
}
