//! Benchmark cases, initial-data projection, exact references and error
//! measures.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Location, Result, SolverError, Stage};
use crate::euler::{d1, d2, Axis, Primitive1, Primitive2};
use crate::gradient::check_state;
use crate::integrator::{Boundary1d, Boundary2d, ExactFn2, Solver1d, Solver2d};
use crate::quadrature;
use crate::recon::{CellField1d, ReconOptions, GHOST};
use crate::recon2d::CellField2d;
use crate::riemann::{self, RiemannSolution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    Smooth,
    TitarevToro,
    LargePressureRatio,
    DoubleMach,
    Riemann2d,
}

/// How a case's numerical solution is judged.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reference {
    /// Closed-form solution at any time.
    ExactFunction,
    /// Self-similar solution of a 1D Riemann problem.
    ExactRiemann,
    /// Same scheme on a finer mesh.
    FineGridSelf { cells: usize },
    None,
}

/// Static description of a benchmark.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseSpec {
    pub name: &'static str,
    pub summary: &'static str,
    pub dims: usize,
    pub x: [f64; 2],
    pub y: Option<[f64; 2]>,
    pub t_end: f64,
    pub cfl: f64,
    /// Default meshes; 2D cases list cells in x, with `aspect` giving cells in y per x cell.
    pub meshes: Vec<usize>,
    pub aspect: Option<(usize, usize)>,
    pub reference: Reference,
    /// Boundary tags, `[left, right]` or `[left, right, bottom, top]`.
    pub boundaries: Vec<&'static str>,
}

pub const GAMMA: f64 = 1.4;

/// Post-shock band of the Titarev-Toro run at `t = 5` where the entropy
/// waves are highly oscillatory; the shock sits near `x = 3.2`.
pub const TITAREV_TORO_WINDOW: (f64, f64) = (-2.0, 2.9);

const TT_STATE: (f64, f64, f64) = (1.515695, 0.523346, 1.805);
const LPR_SPLIT: f64 = 0.3;
const DMR_START: f64 = 1.0 / 6.0;

impl Case {
    pub const ALL: [Case; 5] = [Case::Smooth, Case::TitarevToro, Case::LargePressureRatio, Case::DoubleMach, Case::Riemann2d];

    pub fn name(self) -> &'static str {
        match self {
            Case::Smooth => "smooth",
            Case::TitarevToro => "titarev-toro",
            Case::LargePressureRatio => "large-pressure-ratio",
            Case::DoubleMach => "double-mach",
            Case::Riemann2d => "riemann2d",
        }
    }

    pub fn from_name(name: &str) -> Result<Case> {
        Case::ALL.into_iter().find(|c| c.name() == name).ok_or_else(|| SolverError::UnknownCase {
            name: name.to_string(),
            known: Case::ALL.map(|c| c.name()).join(", "),
        })
    }

    pub fn spec(self) -> CaseSpec {
        match self {
            Case::Smooth => CaseSpec {
                name: self.name(),
                summary: "density sine wave advected through a periodic domain, exact shift solution",
                dims: 1,
                x: [0.0, 2.0],
                y: None,
                t_end: 10.0,
                cfl: 0.1,
                meshes: vec![40, 80, 160, 320, 640],
                aspect: None,
                reference: Reference::ExactFunction,
                boundaries: vec!["periodic", "periodic"],
            },
            Case::TitarevToro => CaseSpec {
                name: self.name(),
                summary: "Mach 1.1 shock running into a high-frequency density wave",
                dims: 1,
                x: [-5.0, 5.0],
                y: None,
                t_end: 5.0,
                cfl: 0.6,
                meshes: vec![1000],
                aspect: None,
                reference: Reference::FineGridSelf { cells: 10000 },
                boundaries: vec!["outflow", "outflow"],
            },
            Case::LargePressureRatio => CaseSpec {
                name: self.name(),
                summary: "Riemann problem with density and pressure ratio 10^4",
                dims: 1,
                x: [0.0, 1.0],
                y: None,
                t_end: 0.12,
                cfl: 0.6,
                meshes: vec![300],
                aspect: None,
                reference: Reference::ExactRiemann,
                boundaries: vec!["outflow", "outflow"],
            },
            Case::DoubleMach => CaseSpec {
                name: self.name(),
                summary: "Mach 10 oblique shock reflecting off a wall starting at x = 1/6",
                dims: 2,
                x: [0.0, 4.0],
                y: Some([0.0, 1.0]),
                t_end: 0.2,
                cfl: 0.6,
                meshes: vec![960],
                aspect: Some((1, 4)),
                reference: Reference::None,
                boundaries: vec!["exact-data", "outflow", "double-mach-composite", "exact-data"],
            },
            Case::Riemann2d => CaseSpec {
                name: self.name(),
                summary: "four-quadrant Riemann problem with vortex sheets and rarefactions",
                dims: 2,
                x: [0.0, 1.0],
                y: Some([0.0, 1.0]),
                t_end: 0.3,
                cfl: 0.6,
                meshes: vec![700],
                aspect: Some((1, 1)),
                reference: Reference::None,
                boundaries: vec!["outflow"; 4],
            },
        }
    }

    /// Cells in y for `nx` cells in x (2D cases).
    pub fn cells_y(self, nx: usize) -> usize {
        match self.spec().aspect {
            Some((num, den)) => (nx * num / den).max(1),
            None => 1,
        }
    }

    /// Initial primitive data of a 1D case.
    pub fn initial_1d(self, x: f64) -> Result<Primitive1> {
        Ok(match self {
            Case::Smooth => Primitive1 { rho: 1.0 + 0.2 * (std::f64::consts::PI * x).sin(), vel: [1.0], p: 1.0 },
            Case::TitarevToro => {
                if x < -4.5 {
                    Primitive1 { rho: TT_STATE.0, vel: [TT_STATE.1], p: TT_STATE.2 }
                } else {
                    Primitive1 { rho: 1.0 + 0.1 * (20.0 * std::f64::consts::PI * x).sin(), vel: [0.0], p: 1.0 }
                }
            }
            Case::LargePressureRatio => {
                if x < LPR_SPLIT {
                    Primitive1 { rho: 10000.0, vel: [0.0], p: 10000.0 }
                } else {
                    Primitive1 { rho: 1.0, vel: [0.0], p: 1.0 }
                }
            }
            Case::DoubleMach | Case::Riemann2d => {
                return Err(SolverError::Domain(format!("{} is a two-dimensional case", self.name())))
            }
        })
    }

    /// Exact 1D solution where one exists.
    pub fn exact_1d(self, x: f64, t: f64, gamma: f64) -> Result<Primitive1> {
        match self {
            Case::Smooth => self.initial_1d(x - t),
            Case::LargePressureRatio => {
                if t == 0.0 {
                    return self.initial_1d(x);
                }
                let (l, r) = lpr_states();
                riemann::sample(&l, &r, gamma, (x - LPR_SPLIT) / t)
            }
            _ => Err(SolverError::NoReference(self.name().to_string())),
        }
    }

    /// Exact data as a function of `(x, y, t)` for 2D cases.
    pub fn data_2d(self, gamma: f64) -> Result<ExactFn2> {
        match self {
            Case::DoubleMach => {
                let (post, pre) = double_mach_states(gamma);
                Ok(Arc::new(move |x, y, t| {
                    if x < DMR_START + (y + 20.0 * t) / 3f64.sqrt() {
                        post
                    } else {
                        pre
                    }
                }))
            }
            Case::Riemann2d => Ok(Arc::new(|x, y, _t| riemann2d_state(x, y))),
            _ => Err(SolverError::Domain(format!("{} is a one-dimensional case", self.name()))),
        }
    }

    pub fn boundaries_1d(self) -> Result<[Boundary1d; 2]> {
        match self {
            Case::Smooth => Ok([Boundary1d::Periodic; 2]),
            Case::TitarevToro | Case::LargePressureRatio => Ok([Boundary1d::Outflow; 2]),
            _ => Err(SolverError::Domain(format!("{} is a two-dimensional case", self.name()))),
        }
    }

    pub fn boundaries_2d(self, gamma: f64) -> Result<[Boundary2d; 4]> {
        match self {
            Case::DoubleMach => {
                let exact = self.data_2d(gamma)?;
                Ok([
                    Boundary2d::Exact(exact.clone()),
                    Boundary2d::Outflow,
                    Boundary2d::WallFrom { start: DMR_START, exact: exact.clone() },
                    Boundary2d::Exact(exact),
                ])
            }
            Case::Riemann2d => Ok([Boundary2d::Outflow, Boundary2d::Outflow, Boundary2d::Outflow, Boundary2d::Outflow]),
            _ => Err(SolverError::Domain(format!("{} is a one-dimensional case", self.name()))),
        }
    }

    pub fn setup_1d(self, cells: usize, gamma: f64, cfl: Option<f64>, opts: ReconOptions) -> Result<Solver1d> {
        let spec = self.spec();
        if spec.dims != 1 {
            return Err(SolverError::Domain(format!("{} is a two-dimensional case", self.name())));
        }
        if cells < 1 {
            return Err(SolverError::Config("need at least one cell".into()));
        }
        let field = project_1d(|x| self.initial_1d(x), cells, spec.x, gamma)?;
        Solver1d::new(field, gamma, cfl.unwrap_or(spec.cfl), opts, self.boundaries_1d()?, 0.0)
    }

    pub fn setup_2d(self, nx: usize, ny: usize, gamma: f64, cfl: Option<f64>, opts: ReconOptions) -> Result<Solver2d> {
        let spec = self.spec();
        let y = spec.y.ok_or_else(|| SolverError::Domain(format!("{} is a one-dimensional case", self.name())))?;
        if nx < 1 || ny < 1 {
            return Err(SolverError::Config("need at least one cell per direction".into()));
        }
        let data = self.data_2d(gamma)?;
        let field = project_2d(&|x, y| data(x, y, 0.0), nx, ny, spec.x, y, gamma)?;
        Solver2d::new(field, gamma, cfl.unwrap_or(spec.cfl), opts, self.boundaries_2d(gamma)?, 0.0)
    }
}

/// Either solver, as produced by [`setup_case`].
#[derive(Debug, Clone)]
pub enum RunState {
    One(Solver1d),
    Two(Solver2d),
}

/// Look up a case by name and build its initial state. `cells_y` defaults
/// to the case's aspect ratio.
pub fn setup_case(
    name: &str,
    cells: usize,
    cells_y: Option<usize>,
    gamma: f64,
    cfl: Option<f64>,
    opts: ReconOptions,
) -> Result<(RunState, CaseSpec)> {
    let case = Case::from_name(name)?;
    let spec = case.spec();
    let state = if spec.dims == 1 {
        RunState::One(case.setup_1d(cells, gamma, cfl, opts)?)
    } else {
        RunState::Two(case.setup_2d(cells, cells_y.unwrap_or_else(|| case.cells_y(cells)), gamma, cfl, opts)?)
    };
    Ok((state, spec))
}

fn lpr_states() -> (Primitive1, Primitive1) {
    (Primitive1 { rho: 10000.0, vel: [0.0], p: 10000.0 }, Primitive1 { rho: 1.0, vel: [0.0], p: 1.0 })
}

/// Exact Riemann solution of the large-pressure-ratio case.
pub fn large_pressure_ratio_solution(gamma: f64) -> Result<RiemannSolution> {
    let (l, r) = lpr_states();
    RiemannSolution::new(l, r, gamma)
}

/// Post- and pre-shock states of the double Mach reflection: a Mach 10
/// shock into `(rho, p) = (1.4, 1)` at rest, post-shock values from the
/// Rankine–Hugoniot relations, velocity along the shock normal
/// `(cos 30°, -sin 30°)`.
pub fn double_mach_states(gamma: f64) -> (Primitive2, Primitive2) {
    let (rho1, p1) = (1.4, 1.0);
    let c1 = (gamma * p1 / rho1).sqrt();
    let mach: f64 = 10.0;
    let m2 = mach * mach;
    let rho2 = rho1 * (gamma + 1.0) * m2 / ((gamma - 1.0) * m2 + 2.0);
    let p2 = p1 * (2.0 * gamma * m2 - (gamma - 1.0)) / (gamma + 1.0);
    let un = mach * c1 * (1.0 - rho1 / rho2);
    let angle = std::f64::consts::PI / 6.0;
    (
        Primitive2 { rho: rho2, vel: [un * angle.cos(), -un * angle.sin()], p: p2 },
        Primitive2 { rho: rho1, vel: [0.0, 0.0], p: p1 },
    )
}

fn riemann2d_state(x: f64, y: f64) -> Primitive2 {
    match (x > 0.5, y > 0.5) {
        (true, true) => Primitive2 { rho: 1.0, vel: [0.1, 0.1], p: 1.0 },
        (false, true) => Primitive2 { rho: 0.5197, vel: [-0.6259, 0.1], p: 0.4 },
        (false, false) => Primitive2 { rho: 0.8, vel: [0.1, 0.1], p: 0.4 },
        (true, false) => Primitive2 { rho: 0.5197, vel: [0.1, -0.6259], p: 0.4 },
    }
}

fn differs<const D: usize>(a: &crate::euler::Primitive<D>, b: &crate::euler::Primitive<D>) -> bool {
    let scale = a.rho.abs() + b.rho.abs() + a.p.abs() + b.p.abs();
    let mut d = (a.rho - b.rho).abs() + (a.p - b.p).abs();
    for k in 0..D {
        d += (a.vel[k] - b.vel[k]).abs();
    }
    d > 1e-6 * scale
}

/// Initial value at a point where the data may jump: the Riemann solution of
/// the one-sided limits at `x/t = 0`, i.e. the interface value an instant
/// after the start. At continuity points this is the point value.
fn point_value_1d(init: &impl Fn(f64) -> Result<Primitive1>, x: f64, h: f64, gamma: f64) -> Result<[f64; 3]> {
    let d = 1e-9 * h;
    let (l, r) = (init(x - d)?, init(x + d)?);
    let w = if differs(&l, &r) { riemann::sample(&l, &r, gamma, 0.0)? } else { init(x)? };
    d1::prim_to_cons(&w, gamma)
}

/// Cell averages by 5-point Gauss quadrature of the conserved variables,
/// interface values from the point data.
pub fn project_1d(init: impl Fn(f64) -> Result<Primitive1>, cells: usize, x: [f64; 2], gamma: f64) -> Result<CellField1d> {
    let mut f = CellField1d::new(cells, x[0], x[1]);
    let h = f.h;
    for j in 0..cells {
        let mut err = None;
        let avg = quadrature::average(f.centre(j), h, |xq| match init(xq).and_then(|w| d1::prim_to_cons(&w, gamma)) {
            Ok(u) => u,
            Err(e) => {
                err.get_or_insert(e);
                [f64::NAN; 3]
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        check_state(&avg, gamma, Location::Cell(j), Stage::Initial)?;
        f.averages[j + GHOST] = avg;
    }
    for i in 0..=cells {
        f.interface_values[i + GHOST] = point_value_1d(&init, x[0] + i as f64 * h, h, gamma)?;
    }
    Ok(f)
}

/// 2D projection: 5x5 Gauss cell averages, edge Gauss-point values from the
/// point data (Riemann solution across the edge normal where the data jumps).
pub fn project_2d(
    init: &dyn Fn(f64, f64) -> Primitive2,
    nx: usize,
    ny: usize,
    x: [f64; 2],
    y: [f64; 2],
    gamma: f64,
) -> Result<CellField2d> {
    let mut f = CellField2d::new(nx, ny, x, y);
    for (i, j) in f.interior_indices().collect::<Vec<_>>() {
        let avg = quadrature::average_2d(f.centre(i, j), [f.hx, f.hy], |xq, yq| d2::prim_to_cons_unchecked(&init(xq, yq), gamma));
        check_state(&avg, gamma, Location::Cell2d(i - GHOST, j - GHOST), Stage::Initial)?;
        let k = f.idx(i, j);
        f.averages[k] = avg;
    }
    for a in [Axis::X, Axis::Y] {
        let nn = f.cells_along(a);
        let nt = f.cells_along(a.other());
        let h = f.h(a);
        for t in GHOST..GHOST + nt {
            for n in GHOST..=GHOST + nn {
                for m in 0..2 {
                    let p = f.edge_point(a, n, t, m);
                    let d = 1e-9 * h;
                    let shift = |s: f64| match a {
                        Axis::X => init(p[0] + s, p[1]),
                        Axis::Y => init(p[0], p[1] + s),
                    };
                    let (l, r) = (shift(-d), shift(d));
                    let w = if differs(&l, &r) {
                        let ws = riemann::sample_normal(&d2::rotate_prim(&l, a), &d2::rotate_prim(&r, a), gamma, 0.0)?;
                        d2::rotate_prim(&ws, a)
                    } else {
                        init(p[0], p[1])
                    };
                    let ei = f.edge_idx(a, n, t, m);
                    f.edges[a.index()][ei] = d2::prim_to_cons(&w, gamma)?;
                }
            }
        }
    }
    Ok(f)
}

/// Exact cell averages of density by 5-point Gauss quadrature.
pub fn exact_density_averages(case: Case, cells: usize, t: f64, gamma: f64) -> Result<Vec<f64>> {
    let spec = case.spec();
    let h = (spec.x[1] - spec.x[0]) / cells as f64;
    let mut out = Vec::with_capacity(cells);
    for j in 0..cells {
        let xc = spec.x[0] + (j as f64 + 0.5) * h;
        let mut err = None;
        let a = quadrature::average(xc, h, |x| match case.exact_1d(x, t, gamma) {
            Ok(w) => [w.rho],
            Err(e) => {
                err.get_or_insert(e);
                [f64::NAN]
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        out.push(a[0]);
    }
    Ok(out)
}

/// `(L1, L∞)` with `L1 = Σ |e_j| h`.
pub fn error_norms(numerical: &[f64], exact: &[f64], h: f64) -> (f64, f64) {
    let mut l1 = 0.0;
    let mut linf: f64 = 0.0;
    for (a, b) in numerical.iter().zip(exact) {
        let e = (a - b).abs();
        l1 += e * h;
        linf = linf.max(e);
    }
    (l1, linf)
}

/// `log2(e_coarse / e_fine)` for consecutive meshes; `None` when an error is
/// zero or not finite.
pub fn convergence_orders(errors: &[f64]) -> Vec<Option<f64>> {
    errors
        .windows(2)
        .map(|w| {
            if w[0] > 0.0 && w[1] > 0.0 && w[0].is_finite() && w[1].is_finite() {
                Some((w[0] / w[1]).log2())
            } else {
                None
            }
        })
        .collect()
}

/// Location of a right-moving density jump: scanning from the right, the
/// first crossing of `level`, linearly interpolated between cell centres.
pub fn shock_position(x: &[f64], rho: &[f64], level: f64) -> Option<f64> {
    for j in (1..rho.len()).rev() {
        let (a, b) = (rho[j - 1], rho[j]);
        if (a - level) * (b - level) <= 0.0 && a != b {
            let s = (level - a) / (b - a);
            return Some(x[j - 1] + s * (x[j] - x[j - 1]));
        }
    }
    None
}

/// `max - min` of `values` at points with `x` in `[lo, hi]`.
pub fn amplitude(x: &[f64], values: &[f64], lo: f64, hi: f64) -> f64 {
    let mut mx = f64::NEG_INFINITY;
    let mut mn = f64::INFINITY;
    for (xi, v) in x.iter().zip(values) {
        if *xi >= lo && *xi <= hi {
            mx = mx.max(*v);
            mn = mn.min(*v);
        }
    }
    if mx >= mn {
        mx - mn
    } else {
        0.0
    }
}
