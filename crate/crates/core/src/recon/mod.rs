//! Spatial reconstruction: scalar kernels plus the 1D field pass that turns
//! cell averages, moments and interface values into interface traces.

pub mod hweno;
pub mod weno;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::euler::d1;
use crate::grp::ReconTrace;
use crate::linalg::{matvec, Mat};

/// Ghost cells per side. The WENO5 window reaches `j±2` around an interface
/// cell and the interface derivative reaches `j+2`.
pub const GHOST: usize = 3;

pub const DEFAULT_EPS: f64 = 1e-40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    Hweno5,
    Weno5,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::Hweno5 => "hweno5",
            Scheme::Weno5 => "weno5",
        }
    }
}

impl std::str::FromStr for Scheme {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "hweno5" => Ok(Scheme::Hweno5),
            "weno5" => Ok(Scheme::Weno5),
            _ => Err(format!("unknown scheme '{s}' (expected hweno5 or weno5)")),
        }
    }
}

/// How the interface derivatives fed to the GRP solver are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DerivativeMode {
    /// Four-cell central interpolation of the averages, single-valued.
    Lagrange,
    /// One-sided derivatives of the Hermite quartic (third order overall).
    HermiteAblation,
}

impl DerivativeMode {
    pub fn name(self) -> &'static str {
        match self {
            DerivativeMode::Lagrange => "lagrange",
            DerivativeMode::HermiteAblation => "hermite-ablation",
        }
    }
}

impl std::str::FromStr for DerivativeMode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "lagrange" => Ok(DerivativeMode::Lagrange),
            "hermite-ablation" => Ok(DerivativeMode::HermiteAblation),
            _ => Err(format!("unknown derivative mode '{s}' (expected lagrange or hermite-ablation)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variables {
    Characteristic,
    Componentwise,
}

impl Variables {
    pub fn name(self) -> &'static str {
        match self {
            Variables::Characteristic => "characteristic",
            Variables::Componentwise => "componentwise",
        }
    }
}

impl std::str::FromStr for Variables {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "characteristic" => Ok(Variables::Characteristic),
            "componentwise" => Ok(Variables::Componentwise),
            _ => Err(format!("unknown variables '{s}' (expected characteristic or componentwise)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReconOptions {
    pub scheme: Scheme,
    pub derivative: DerivativeMode,
    pub variables: Variables,
    pub eps: f64,
}

impl Default for ReconOptions {
    fn default() -> Self {
        ReconOptions {
            scheme: Scheme::Hweno5,
            derivative: DerivativeMode::Lagrange,
            variables: Variables::Characteristic,
            eps: DEFAULT_EPS,
        }
    }
}

impl ReconOptions {
    pub fn new(scheme: Scheme) -> Self {
        ReconOptions { scheme, ..Default::default() }
    }
}

/// Derivative at `x_{j+1/2}` from `ū_{j-1}, ū_j, ū_{j+1}, ū_{j+2}`; exact for cubics.
#[inline(always)]
pub fn interface_derivative(u: [f64; 4], h: f64) -> f64 {
    (u[0] - 15.0 * u[1] + 15.0 * u[2] - u[3]) / (12.0 * h)
}

/// 1D cell data with `GHOST` ghost cells on each side.
///
/// Storage cell `s` spans interfaces `s` and `s + 1`; physical cell `j`
/// is storage `j + GHOST`, physical interface `i` (between cells `i-1`
/// and `i`) is interface storage `i + GHOST`.
#[derive(Debug, Clone, PartialEq)]
pub struct CellField1d {
    pub cells: usize,
    pub h: f64,
    pub x_min: f64,
    pub averages: Vec<[f64; 3]>,
    pub interface_values: Vec<[f64; 3]>,
    /// `h Δu`, recomputed from the interface values before each reconstruction.
    pub moments: Vec<[f64; 3]>,
}

impl CellField1d {
    pub fn new(cells: usize, x_min: f64, x_max: f64) -> Self {
        let n = cells + 2 * GHOST;
        CellField1d {
            cells,
            h: (x_max - x_min) / cells as f64,
            x_min,
            averages: vec![[0.0; 3]; n],
            interface_values: vec![[0.0; 3]; n + 1],
            moments: vec![[0.0; 3]; n],
        }
    }

    pub fn storage_len(&self) -> usize {
        self.cells + 2 * GHOST
    }

    pub fn centre(&self, j: usize) -> f64 {
        self.x_min + (j as f64 + 0.5) * self.h
    }

    /// Physical cell averages.
    pub fn interior(&self) -> &[[f64; 3]] {
        &self.averages[GHOST..GHOST + self.cells]
    }

    pub fn interior_mut(&mut self) -> &mut [[f64; 3]] {
        let n = self.cells;
        &mut self.averages[GHOST..GHOST + n]
    }

    /// Physical interface values, `cells + 1` of them.
    pub fn interior_interfaces(&self) -> &[[f64; 3]] {
        &self.interface_values[GHOST..GHOST + self.cells + 1]
    }

    /// `h Δu_j = û_{j+1/2} - û_{j-1/2}` for every storage cell.
    pub fn update_moments(&mut self) {
        crate::gradient::moments_1d_scaled(&self.interface_values, &mut self.moments);
    }

    pub fn total(&self) -> [f64; 3] {
        let mut s = [0.0; 3];
        for u in self.interior() {
            for k in 0..3 {
                s[k] += u[k] * self.h;
            }
        }
        s
    }
}

/// Characteristic frame: rows of `left` project onto characteristic
/// fields, columns of `right` map back.
#[derive(Debug, Clone, Copy)]
pub struct Frame<const N: usize> {
    pub left: Mat<N>,
    pub right: Mat<N>,
}

impl<const N: usize> Frame<N> {
    #[inline(always)]
    pub fn project(frame: Option<&Self>, v: &[f64; N]) -> [f64; N] {
        match frame {
            Some(f) => matvec(&f.left, v),
            None => *v,
        }
    }

    #[inline(always)]
    pub fn unproject(frame: Option<&Self>, v: &[f64; N]) -> [f64; N] {
        match frame {
            Some(f) => matvec(&f.right, v),
            None => *v,
        }
    }
}

fn frame_1d(a: &[f64; 3], b: &[f64; 3], gamma: f64, vars: Variables) -> Result<Option<Frame<3>>> {
    match vars {
        Variables::Componentwise => Ok(None),
        Variables::Characteristic => {
            let m: [f64; 3] = std::array::from_fn(|k| 0.5 * (a[k] + b[k]));
            let e = d1::eigensystem(&m, gamma)?;
            Ok(Some(Frame { left: e.left, right: e.right }))
        }
    }
}

/// HWENO limits `(u_{-}, u_{+})` at the interface between `c[1]` and `c[2]`
/// from four averages and their scaled moments.
#[inline(always)]
pub fn hweno_traces<const N: usize>(
    frame: Option<&Frame<N>>,
    c: &[[f64; N]; 4],
    m: &[[f64; N]; 4],
    eps: f64,
) -> ([f64; N], [f64; N]) {
    let cc: [[f64; N]; 4] = std::array::from_fn(|k| Frame::project(frame, &c[k]));
    let mm: [[f64; N]; 4] = std::array::from_fn(|k| Frame::project(frame, &m[k]));
    let mut lo = [0.0; N];
    let mut hi = [0.0; N];
    for f in 0..N {
        let wl = hweno::HermiteWindow {
            left: cc[0][f],
            centre: cc[1][f],
            right: cc[2][f],
            moment_left: mm[0][f],
            moment_right: mm[2][f],
        };
        let wr = hweno::HermiteWindow {
            left: cc[1][f],
            centre: cc[2][f],
            right: cc[3][f],
            moment_left: mm[1][f],
            moment_right: mm[3][f],
        };
        lo[f] = hweno::trace_left(&wl, eps);
        hi[f] = hweno::trace_right(&wr, eps);
    }
    (Frame::unproject(frame, &lo), Frame::unproject(frame, &hi))
}

/// WENO5 limits at the interface between `c[2]` and `c[3]`.
#[inline(always)]
pub fn weno_traces<const N: usize>(frame: Option<&Frame<N>>, c: &[[f64; N]; 6], eps: f64) -> ([f64; N], [f64; N]) {
    let cc: [[f64; N]; 6] = std::array::from_fn(|k| Frame::project(frame, &c[k]));
    let mut lo = [0.0; N];
    let mut hi = [0.0; N];
    for f in 0..N {
        lo[f] = weno::trace_left(&[cc[0][f], cc[1][f], cc[2][f], cc[3][f], cc[4][f]], eps);
        hi[f] = weno::trace_right(&[cc[1][f], cc[2][f], cc[3][f], cc[4][f], cc[5][f]], eps);
    }
    (Frame::unproject(frame, &lo), Frame::unproject(frame, &hi))
}

/// Single-valued interface derivative between `c[1]` and `c[2]`.
#[inline(always)]
pub fn lagrange_derivative<const N: usize>(c: &[[f64; N]; 4], h: f64) -> [f64; N] {
    std::array::from_fn(|f| interface_derivative([c[0][f], c[1][f], c[2][f], c[3][f]], h))
}

/// One-sided Hermite derivatives `(du/dx_-, du/dx_+)` between `c[1]` and `c[2]`.
#[inline]
pub fn hermite_derivatives<const N: usize>(c: &[[f64; N]; 4], m: &[[f64; N]; 4], h: f64) -> ([f64; N], [f64; N]) {
    let mut dm = [0.0; N];
    let mut dp = [0.0; N];
    for f in 0..N {
        let wl = hweno::HermiteWindow {
            left: c[0][f],
            centre: c[1][f],
            right: c[2][f],
            moment_left: m[0][f],
            moment_right: m[2][f],
        };
        let wr = hweno::HermiteWindow {
            left: c[1][f],
            centre: c[2][f],
            right: c[3][f],
            moment_left: m[1][f],
            moment_right: m[3][f],
        };
        dm[f] = hweno::interface_derivative_hermite(&wl, h).1;
        dp[f] = hweno::interface_derivative_hermite(&wr, h).0;
    }
    (dm, dp)
}

/// One-sided limits and derivatives at storage interface `s`, between
/// storage cells `s-1` and `s`. Moments must be current.
pub fn reconstruct_interface(field: &CellField1d, s: usize, gamma: f64, opts: &ReconOptions) -> Result<ReconTrace<3>> {
    let ub = &field.averages;
    let hm = &field.moments;
    let frame = frame_1d(&ub[s - 1], &ub[s], gamma, opts.variables)?;
    let c4: [[f64; 3]; 4] = [ub[s - 2], ub[s - 1], ub[s], ub[s + 1]];
    let m4: [[f64; 3]; 4] = [hm[s - 2], hm[s - 1], hm[s], hm[s + 1]];
    let (u_minus, u_plus) = match opts.scheme {
        Scheme::Hweno5 => hweno_traces(frame.as_ref(), &c4, &m4, opts.eps),
        Scheme::Weno5 => {
            let c6 = [ub[s - 3], ub[s - 2], ub[s - 1], ub[s], ub[s + 1], ub[s + 2]];
            weno_traces(frame.as_ref(), &c6, opts.eps)
        }
    };
    let (dudx_minus, dudx_plus) = match opts.derivative {
        DerivativeMode::Lagrange => {
            let d = lagrange_derivative(&c4, field.h);
            (d, d)
        }
        DerivativeMode::HermiteAblation => hermite_derivatives(&c4, &m4, field.h),
    };
    Ok(ReconTrace { u_minus, u_plus, dudx_minus, dudx_plus })
}
