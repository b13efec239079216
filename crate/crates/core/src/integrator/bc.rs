//! Ghost-layer filling. Every boundary type fills ghost cell averages and
//! ghost interface (edge) values together, so moments computed across the
//! boundary are consistent with the averages.

use std::fmt;
use std::sync::Arc;

use crate::error::{Result, SolverError};
use crate::euler::{d1, d2, Axis, Primitive1, Primitive2};
use crate::quadrature;
use crate::recon::{CellField1d, GHOST};
use crate::recon2d::CellField2d;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Boundary1d {
    Periodic,
    /// Zero-gradient extrapolation.
    Outflow,
    /// Solid wall: mirrored states with negated velocity.
    Reflective,
    Dirichlet(Primitive1),
}

/// Exact primitive data `(x, y, t)`.
pub type ExactFn2 = Arc<dyn Fn(f64, f64, f64) -> Primitive2 + Send + Sync>;

#[derive(Clone)]
pub enum Boundary2d {
    Periodic,
    Outflow,
    Reflective,
    Dirichlet(Primitive2),
    /// Ghost data taken from an exact time-dependent solution.
    Exact(ExactFn2),
    /// Exact data upstream of `start` (tangential coordinate), reflective
    /// wall downstream of it.
    WallFrom { start: f64, exact: ExactFn2 },
}

impl fmt::Debug for Boundary2d {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Boundary2d::Periodic => f.write_str("Periodic"),
            Boundary2d::Outflow => f.write_str("Outflow"),
            Boundary2d::Reflective => f.write_str("Reflective"),
            Boundary2d::Dirichlet(w) => write!(f, "Dirichlet({w:?})"),
            Boundary2d::Exact(_) => f.write_str("Exact"),
            Boundary2d::WallFrom { start, .. } => write!(f, "WallFrom({start})"),
        }
    }
}

impl Boundary1d {
    pub fn tag(&self) -> &'static str {
        match self {
            Boundary1d::Periodic => "periodic",
            Boundary1d::Outflow => "outflow",
            Boundary1d::Reflective => "reflective-wall",
            Boundary1d::Dirichlet(_) => "dirichlet-state",
        }
    }
}

impl Boundary2d {
    pub fn tag(&self) -> &'static str {
        match self {
            Boundary2d::Periodic => "periodic",
            Boundary2d::Outflow => "outflow",
            Boundary2d::Reflective => "reflective-wall",
            Boundary2d::Dirichlet(_) => "dirichlet-state",
            Boundary2d::Exact(_) => "exact-data",
            Boundary2d::WallFrom { .. } => "double-mach-composite",
        }
    }
}

pub fn validate_1d(bc: &[Boundary1d; 2], gamma: f64) -> Result<()> {
    let periodic = bc.iter().filter(|b| matches!(b, Boundary1d::Periodic)).count();
    if periodic == 1 {
        return Err(SolverError::Config("periodic boundaries must be paired".into()));
    }
    for b in bc {
        if let Boundary1d::Dirichlet(w) = b {
            d1::prim_to_cons(w, gamma)?;
        }
    }
    Ok(())
}

pub fn validate_2d(bc: &[Boundary2d; 4], gamma: f64) -> Result<()> {
    for pair in [[0, 1], [2, 3]] {
        let p = pair.iter().filter(|&&k| matches!(bc[k], Boundary2d::Periodic)).count();
        if p == 1 {
            return Err(SolverError::Config("periodic boundaries must be paired".into()));
        }
    }
    for b in bc {
        if let Boundary2d::Dirichlet(w) = b {
            d2::prim_to_cons(w, gamma)?;
        }
    }
    Ok(())
}

/// Fill ghost cells and ghost interface values; `bc = [left, right]`.
pub fn apply_1d(field: &mut CellField1d, bc: &[Boundary1d; 2], gamma: f64) {
    let n = field.cells;
    let g = GHOST;
    let avg = &mut field.averages;
    let iv = &mut field.interface_values;
    match bc[0] {
        Boundary1d::Periodic => {
            for k in 0..g {
                avg[g - 1 - k] = avg[g + n - 1 - k];
                iv[g - 1 - k] = iv[g + n - 1 - k];
            }
        }
        Boundary1d::Outflow => {
            for k in 0..g {
                avg[g - 1 - k] = avg[g];
                iv[g - 1 - k] = iv[g];
            }
        }
        Boundary1d::Reflective => {
            for k in 0..g {
                avg[g - 1 - k] = d1::mirror(&avg[g + k]);
                iv[g - 1 - k] = d1::mirror(&iv[g + 1 + k]);
            }
        }
        Boundary1d::Dirichlet(w) => {
            let u = d1::prim_to_cons_unchecked(&w, gamma);
            for k in 0..g {
                avg[k] = u;
                iv[k] = u;
            }
        }
    }
    match bc[1] {
        Boundary1d::Periodic => {
            for k in 0..g {
                avg[g + n + k] = avg[g + k];
                iv[g + n + 1 + k] = iv[g + 1 + k];
            }
        }
        Boundary1d::Outflow => {
            for k in 0..g {
                avg[g + n + k] = avg[g + n - 1];
                iv[g + n + 1 + k] = iv[g + n];
            }
        }
        Boundary1d::Reflective => {
            for k in 0..g {
                avg[g + n + k] = d1::mirror(&avg[g + n - 1 - k]);
                iv[g + n + 1 + k] = d1::mirror(&iv[g + n - 1 - k]);
            }
        }
        Boundary1d::Dirichlet(w) => {
            let u = d1::prim_to_cons_unchecked(&w, gamma);
            for k in 0..g {
                avg[g + n + k] = u;
                iv[g + n + 1 + k] = u;
            }
        }
    }
}

#[inline(always)]
fn reflect(u: &[f64; 4], a: Axis) -> [f64; 4] {
    let mut r = *u;
    r[1 + a.index()] = -r[1 + a.index()];
    r
}

fn exact_cons(exact: &ExactFn2, x: f64, y: f64, t: f64, gamma: f64) -> [f64; 4] {
    d2::prim_to_cons_unchecked(&exact(x, y, t), gamma)
}

fn exact_average(f: &CellField2d, exact: &ExactFn2, i: usize, j: usize, t: f64, gamma: f64) -> [f64; 4] {
    quadrature::average_2d(f.centre(i, j), [f.hx, f.hy], |x, y| exact_cons(exact, x, y, t, gamma))
}

/// How one ghost entity is obtained.
enum Source {
    /// Copy (n, flip Gauss order, reflect).
    Cell { n: usize, flip: bool, reflect: bool, mean: bool },
    Value,
    Exact,
}

fn resolve(b: &Boundary2d, tangential_coord: f64, periodic_src: usize, mirror_src: usize, outflow_src: usize) -> Source {
    match b {
        Boundary2d::Periodic => Source::Cell { n: periodic_src, flip: false, reflect: false, mean: false },
        Boundary2d::Outflow => Source::Cell { n: outflow_src, flip: false, reflect: false, mean: true },
        Boundary2d::Reflective => Source::Cell { n: mirror_src, flip: true, reflect: true, mean: false },
        Boundary2d::Dirichlet(_) => Source::Value,
        Boundary2d::Exact(_) => Source::Exact,
        Boundary2d::WallFrom { start, .. } => {
            if tangential_coord < *start {
                Source::Exact
            } else {
                Source::Cell { n: mirror_src, flip: true, reflect: true, mean: false }
            }
        }
    }
}

fn exact_of(b: &Boundary2d) -> Option<&ExactFn2> {
    match b {
        Boundary2d::Exact(e) | Boundary2d::WallFrom { exact: e, .. } => Some(e),
        _ => None,
    }
}

/// Fill the ghost layers of one axis. `tangential` is the range of
/// tangential cell indices to fill; tangential edges of ghost cells are
/// filled for every tangential edge index in `edge_range`.
fn fill_axis(
    f: &mut CellField2d,
    a: Axis,
    sides: [&Boundary2d; 2],
    tangential: std::ops::Range<usize>,
    edge_range: std::ops::RangeInclusive<usize>,
    t_now: f64,
    gamma: f64,
) {
    let b = a.other();
    let nn = f.cells_along(a);
    let g = GHOST;
    let coord_t = |f: &CellField2d, t: usize| -> f64 {
        let c = f.centre(t, t);
        c[b.index()]
    };
    let tangential_edge_coord = |f: &CellField2d, te: usize| -> f64 {
        let origin = if b == Axis::X { f.x_min } else { f.y_min };
        origin + (te as f64 - g as f64) * f.h(b)
    };
    for (side, bnd) in sides.iter().enumerate() {
        let dirichlet = match bnd {
            Boundary2d::Dirichlet(w) => Some(d2::prim_to_cons_unchecked(w, gamma)),
            _ => None,
        };
        let exact = exact_of(bnd);
        for k in 0..g {
            // ghost cell, its outer normal edge and source indices
            let (cell, p_src, m_src, o_src, edge, pe_src, me_src, oe_src) = if side == 0 {
                (g - 1 - k, g + nn - 1 - k, g + k, g, g - 1 - k, g + nn - 1 - k, g + 1 + k, g)
            } else {
                (g + nn + k, g + k, g + nn - 1 - k, g + nn - 1, g + nn + 1 + k, g + 1 + k, g + nn - 1 - k, g + nn)
            };
            // cells and normal edges
            for t in tangential.clone() {
                let src = resolve(bnd, coord_t(f, t), p_src, m_src, o_src);
                let ci = f.cell_idx(a, cell, t);
                let value = match src {
                    Source::Cell { n, reflect: r, .. } => {
                        let u = f.averages[f.cell_idx(a, n, t)];
                        if r {
                            reflect(&u, a)
                        } else {
                            u
                        }
                    }
                    Source::Value => dirichlet.unwrap(),
                    Source::Exact => {
                        let (i, j) = if a == Axis::X { (cell, t) } else { (t, cell) };
                        exact_average(f, exact.unwrap(), i, j, t_now, gamma)
                    }
                };
                f.averages[ci] = value;
                let esrc = resolve(bnd, coord_t(f, t), pe_src, me_src, oe_src);
                for m in 0..2 {
                    let ei = f.edge_idx(a, edge, t, m);
                    let v = match esrc {
                        Source::Cell { n, reflect: r, .. } => {
                            let u = f.edges[a.index()][f.edge_idx(a, n, t, m)];
                            if r {
                                reflect(&u, a)
                            } else {
                                u
                            }
                        }
                        Source::Value => dirichlet.unwrap(),
                        Source::Exact => {
                            let p = f.edge_point(a, edge, t, m);
                            exact_cons(exact.unwrap(), p[0], p[1], t_now, gamma)
                        }
                    };
                    f.edges[a.index()][ei] = v;
                }
            }
            // tangential edges of the ghost cell: Gauss points run along `a`
            for te in edge_range.clone() {
                let src = resolve(bnd, tangential_edge_coord(f, te), p_src, m_src, o_src);
                let vals: [[f64; 4]; 2] = match src {
                    Source::Cell { n, flip, reflect: r, mean } => {
                        let s0 = f.edges[b.index()][f.edge_idx(b, te, n, 0)];
                        let s1 = f.edges[b.index()][f.edge_idx(b, te, n, 1)];
                        let mut v = if flip { [s1, s0] } else { [s0, s1] };
                        if mean {
                            let avg: [f64; 4] = std::array::from_fn(|c| 0.5 * (s0[c] + s1[c]));
                            v = [avg, avg];
                        }
                        if r {
                            v = [reflect(&v[0], a), reflect(&v[1], a)];
                        }
                        v
                    }
                    Source::Value => [dirichlet.unwrap(); 2],
                    Source::Exact => std::array::from_fn(|m| {
                        let p = f.edge_point(b, te, cell, m);
                        exact_cons(exact.unwrap(), p[0], p[1], t_now, gamma)
                    }),
                };
                for (m, v) in vals.iter().enumerate() {
                    let ei = f.edge_idx(b, te, cell, m);
                    f.edges[b.index()][ei] = *v;
                }
            }
        }
    }
}

/// Fill all ghost data at time `t`; `bc = [left, right, bottom, top]`.
/// The x sweep covers physical rows, the y sweep every column, so corner
/// ghosts are filled from already-filled x ghosts.
pub fn apply_2d(field: &mut CellField2d, bc: &[Boundary2d; 4], t: f64, gamma: f64) {
    let g = GHOST;
    let ny = field.ny;
    let sx = field.sx();
    fill_axis(field, Axis::X, [&bc[0], &bc[1]], g..g + ny, g..=g + ny, t, gamma);
    fill_axis(field, Axis::Y, [&bc[2], &bc[3]], 0..sx, 0..=sx, t, gamma);
}
