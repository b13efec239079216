//! Ideal-gas Euler equations: variable conversions, fluxes, Jacobians and
//! characteristic eigensystems.
//!
//! Conserved states are plain arrays: `[rho, rho*v, E]` in one dimension and
//! `[rho, rho*u, rho*v, E]` in two. The y-direction quantities in 2D are
//! obtained from the x-direction ones by swapping the two momentum
//! components, so both sweep directions share the same arithmetic.

use crate::error::{Location, Result, SolverError, Stage};
use crate::linalg::Mat;

pub type Conserved1 = [f64; 3];
pub type Conserved2 = [f64; 4];

/// Primitive variables `(rho, velocity, p)` for a `D`-dimensional flow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Primitive<const D: usize> {
    pub rho: f64,
    pub vel: [f64; D],
    pub p: f64,
}

pub type Primitive1 = Primitive<1>;
pub type Primitive2 = Primitive<2>;

/// Wave speeds with left/right eigenvectors of a flux Jacobian.
///
/// Convention: right eigenvectors of the acoustic and entropy fields have unit
/// density component, the shear field (2D) has unit transverse momentum, and
/// `left` is the exact inverse of `right` so that `left * right = I`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenSystem<const N: usize> {
    /// Sorted ascending.
    pub lambdas: [f64; N],
    /// Rows are left eigenvectors.
    pub left: Mat<N>,
    /// Columns are right eigenvectors.
    pub right: Mat<N>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    pub fn other(self) -> Axis {
        match self {
            Axis::X => Axis::Y,
            Axis::Y => Axis::X,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
        }
    }
}

pub fn check_gamma(gamma: f64) -> Result<()> {
    if gamma.is_finite() && gamma > 1.0 {
        Ok(())
    } else {
        Err(SolverError::Domain(format!("ratio of specific heats must exceed 1, got {gamma}")))
    }
}

#[inline]
fn positivity(rho: f64, p: f64) -> SolverError {
    SolverError::Positivity {
        location: Location::None,
        stage: Stage::Standalone,
        rho,
        p,
    }
}

impl<const D: usize> Primitive<D> {
    pub fn new(rho: f64, vel: [f64; D], p: f64) -> Result<Self> {
        let w = Primitive { rho, vel, p };
        w.validate()?;
        Ok(w)
    }

    pub fn validate(&self) -> Result<()> {
        let finite = self.rho.is_finite() && self.p.is_finite() && self.vel.iter().all(|v| v.is_finite());
        if finite && self.rho > 0.0 && self.p > 0.0 {
            Ok(())
        } else {
            Err(SolverError::Domain(format!(
                "primitive state needs finite rho > 0 and p > 0 (rho = {}, p = {})",
                self.rho, self.p
            )))
        }
    }

    pub fn sound_speed(&self, gamma: f64) -> f64 {
        (gamma * self.p / self.rho).sqrt()
    }
}

impl Primitive1 {
    pub fn mirrored(&self) -> Self {
        Primitive { rho: self.rho, vel: [-self.vel[0]], p: self.p }
    }
}

/// One-dimensional Euler system.
pub mod d1 {
    use super::*;

    pub fn prim_to_cons(w: &Primitive1, gamma: f64) -> Result<Conserved1> {
        check_gamma(gamma)?;
        w.validate()?;
        Ok(prim_to_cons_unchecked(w, gamma))
    }

    #[inline]
    pub fn prim_to_cons_unchecked(w: &Primitive1, gamma: f64) -> Conserved1 {
        let v = w.vel[0];
        [w.rho, w.rho * v, w.p / (gamma - 1.0) + 0.5 * w.rho * v * v]
    }

    #[inline]
    pub fn cons_to_prim(u: &Conserved1, gamma: f64) -> Result<Primitive1> {
        let rho = u[0];
        if !(rho > 0.0) || !rho.is_finite() {
            return Err(positivity(rho, f64::NAN));
        }
        let v = u[1] / rho;
        let p = (gamma - 1.0) * (u[2] - 0.5 * rho * v * v);
        if !(p > 0.0) || !p.is_finite() {
            return Err(positivity(rho, p));
        }
        Ok(Primitive { rho, vel: [v], p })
    }

    #[inline]
    pub fn flux_prim(w: &Primitive1, gamma: f64) -> Conserved1 {
        let v = w.vel[0];
        let e = w.p / (gamma - 1.0) + 0.5 * w.rho * v * v;
        [w.rho * v, w.rho * v * v + w.p, v * (e + w.p)]
    }

    pub fn flux(u: &Conserved1, gamma: f64) -> Result<Conserved1> {
        Ok(flux_prim(&cons_to_prim(u, gamma)?, gamma))
    }

    /// Flux Jacobian `df/du` at primitive state `w`.
    #[inline]
    pub fn jacobian_prim(w: &Primitive1, gamma: f64) -> Mat<3> {
        let v = w.vel[0];
        let g1 = gamma - 1.0;
        let e = w.p / g1 + 0.5 * w.rho * v * v;
        let hh = (e + w.p) / w.rho;
        [
            [0.0, 1.0, 0.0],
            [0.5 * (gamma - 3.0) * v * v, (3.0 - gamma) * v, g1],
            [v * (0.5 * g1 * v * v - hh), hh - g1 * v * v, gamma * v],
        ]
    }

    pub fn jacobian(u: &Conserved1, gamma: f64) -> Result<Mat<3>> {
        Ok(jacobian_prim(&cons_to_prim(u, gamma)?, gamma))
    }

    #[inline]
    pub fn eigensystem_prim(w: &Primitive1, gamma: f64) -> EigenSystem<3> {
        let v = w.vel[0];
        let c = w.sound_speed(gamma);
        let g1 = gamma - 1.0;
        let e = w.p / g1 + 0.5 * w.rho * v * v;
        let hh = (e + w.p) / w.rho;
        let b1 = g1 / (c * c);
        let b2 = 0.5 * b1 * v * v;
        let ic = 1.0 / c;
        EigenSystem {
            lambdas: [v - c, v, v + c],
            right: [
                [1.0, 1.0, 1.0],
                [v - c, v, v + c],
                [hh - v * c, 0.5 * v * v, hh + v * c],
            ],
            left: [
                [0.5 * (b2 + v * ic), -0.5 * (b1 * v + ic), 0.5 * b1],
                [1.0 - b2, b1 * v, -b1],
                [0.5 * (b2 - v * ic), -0.5 * (b1 * v - ic), 0.5 * b1],
            ],
        }
    }

    pub fn eigensystem(u: &Conserved1, gamma: f64) -> Result<EigenSystem<3>> {
        Ok(eigensystem_prim(&cons_to_prim(u, gamma)?, gamma))
    }

    /// Largest `|v| + c` over a set of cell states.
    pub fn max_wave_speed(cells: &[Conserved1], gamma: f64) -> Result<f64> {
        let mut s: f64 = 0.0;
        for (k, u) in cells.iter().enumerate() {
            let w = cons_to_prim(u, gamma).map_err(|e| e.at(Location::Cell(k), Stage::Standalone))?;
            s = s.max(w.vel[0].abs() + w.sound_speed(gamma));
        }
        Ok(s)
    }

    pub fn mirror(u: &Conserved1) -> Conserved1 {
        [u[0], -u[1], u[2]]
    }
}

/// Two-dimensional Euler system.
pub mod d2 {
    use super::*;

    /// Swap the momentum components. Maps y-direction quantities onto the
    /// x-direction frame and back (it is an involution).
    #[inline(always)]
    pub fn rotate(u: &Conserved2, axis: Axis) -> Conserved2 {
        match axis {
            Axis::X => *u,
            Axis::Y => [u[0], u[2], u[1], u[3]],
        }
    }

    #[inline(always)]
    pub fn rotate_prim(w: &Primitive2, axis: Axis) -> Primitive2 {
        match axis {
            Axis::X => *w,
            Axis::Y => Primitive { rho: w.rho, vel: [w.vel[1], w.vel[0]], p: w.p },
        }
    }

    pub fn prim_to_cons(w: &Primitive2, gamma: f64) -> Result<Conserved2> {
        check_gamma(gamma)?;
        w.validate()?;
        Ok(prim_to_cons_unchecked(w, gamma))
    }

    #[inline]
    pub fn prim_to_cons_unchecked(w: &Primitive2, gamma: f64) -> Conserved2 {
        let [u, v] = w.vel;
        [w.rho, w.rho * u, w.rho * v, w.p / (gamma - 1.0) + 0.5 * w.rho * (u * u + v * v)]
    }

    #[inline]
    pub fn cons_to_prim(u: &Conserved2, gamma: f64) -> Result<Primitive2> {
        let rho = u[0];
        if !(rho > 0.0) || !rho.is_finite() {
            return Err(positivity(rho, f64::NAN));
        }
        let vx = u[1] / rho;
        let vy = u[2] / rho;
        let p = (gamma - 1.0) * (u[3] - 0.5 * rho * (vx * vx + vy * vy));
        if !(p > 0.0) || !p.is_finite() {
            return Err(positivity(rho, p));
        }
        Ok(Primitive { rho, vel: [vx, vy], p })
    }

    #[inline]
    fn flux_x_prim(w: &Primitive2, gamma: f64) -> Conserved2 {
        let [u, v] = w.vel;
        let e = w.p / (gamma - 1.0) + 0.5 * w.rho * (u * u + v * v);
        [w.rho * u, w.rho * u * u + w.p, w.rho * u * v, u * (e + w.p)]
    }

    #[inline]
    pub fn flux_prim(w: &Primitive2, gamma: f64, axis: Axis) -> Conserved2 {
        rotate(&flux_x_prim(&rotate_prim(w, axis), gamma), axis)
    }

    pub fn flux(u: &Conserved2, gamma: f64, axis: Axis) -> Result<Conserved2> {
        Ok(flux_prim(&cons_to_prim(u, gamma)?, gamma, axis))
    }

    #[inline]
    fn jacobian_x_prim(w: &Primitive2, gamma: f64) -> Mat<4> {
        let [u, v] = w.vel;
        let g1 = gamma - 1.0;
        let q = 0.5 * (u * u + v * v);
        let e = w.p / g1 + w.rho * q;
        let hh = (e + w.p) / w.rho;
        [
            [0.0, 1.0, 0.0, 0.0],
            [g1 * q - u * u, (3.0 - gamma) * u, -g1 * v, g1],
            [-u * v, v, u, 0.0],
            [u * (g1 * q - hh), hh - g1 * u * u, -g1 * u * v, gamma * u],
        ]
    }

    /// Permute rows and columns 1 and 2 of a 4x4 matrix.
    #[inline]
    fn permute(m: &Mat<4>) -> Mat<4> {
        const P: [usize; 4] = [0, 2, 1, 3];
        let mut out = [[0.0; 4]; 4];
        for r in 0..4 {
            for c in 0..4 {
                out[r][c] = m[P[r]][P[c]];
            }
        }
        out
    }

    #[inline]
    pub fn jacobian_prim(w: &Primitive2, gamma: f64, axis: Axis) -> Mat<4> {
        match axis {
            Axis::X => jacobian_x_prim(w, gamma),
            Axis::Y => permute(&jacobian_x_prim(&rotate_prim(w, Axis::Y), gamma)),
        }
    }

    pub fn jacobian(u: &Conserved2, gamma: f64, axis: Axis) -> Result<Mat<4>> {
        Ok(jacobian_prim(&cons_to_prim(u, gamma)?, gamma, axis))
    }

    #[inline]
    fn eigensystem_x_prim(w: &Primitive2, gamma: f64) -> EigenSystem<4> {
        let [u, v] = w.vel;
        let c = w.sound_speed(gamma);
        let g1 = gamma - 1.0;
        let q = 0.5 * (u * u + v * v);
        let e = w.p / g1 + w.rho * q;
        let hh = (e + w.p) / w.rho;
        let b1 = g1 / (c * c);
        let b2 = b1 * q;
        let ic = 1.0 / c;
        EigenSystem {
            lambdas: [u - c, u, u, u + c],
            right: [
                [1.0, 1.0, 0.0, 1.0],
                [u - c, u, 0.0, u + c],
                [v, v, 1.0, v],
                [hh - u * c, q, v, hh + u * c],
            ],
            left: [
                [0.5 * (b2 + u * ic), -0.5 * (b1 * u + ic), -0.5 * b1 * v, 0.5 * b1],
                [1.0 - b2, b1 * u, b1 * v, -b1],
                [-v, 0.0, 1.0, 0.0],
                [0.5 * (b2 - u * ic), -0.5 * (b1 * u - ic), -0.5 * b1 * v, 0.5 * b1],
            ],
        }
    }

    #[inline]
    pub fn eigensystem_prim(w: &Primitive2, gamma: f64, axis: Axis) -> EigenSystem<4> {
        match axis {
            Axis::X => eigensystem_x_prim(w, gamma),
            Axis::Y => {
                let es = eigensystem_x_prim(&rotate_prim(w, Axis::Y), gamma);
                let mut right = [[0.0; 4]; 4];
                let mut left = [[0.0; 4]; 4];
                const P: [usize; 4] = [0, 2, 1, 3];
                for r in 0..4 {
                    for c in 0..4 {
                        right[r][c] = es.right[P[r]][c];
                        left[r][c] = es.left[r][P[c]];
                    }
                }
                EigenSystem { lambdas: es.lambdas, left, right }
            }
        }
    }

    pub fn eigensystem(u: &Conserved2, gamma: f64, axis: Axis) -> Result<EigenSystem<4>> {
        Ok(eigensystem_prim(&cons_to_prim(u, gamma)?, gamma, axis))
    }

    /// Per-axis maxima of `|u| + c` and `|v| + c`.
    pub fn max_wave_speed<'a, I>(cells: I, gamma: f64) -> Result<[f64; 2]>
    where
        I: IntoIterator<Item = &'a Conserved2>,
    {
        let mut s = [0.0_f64; 2];
        for (k, u) in cells.into_iter().enumerate() {
            let w = cons_to_prim(u, gamma).map_err(|e| e.at(Location::Cell(k), Stage::Standalone))?;
            let c = w.sound_speed(gamma);
            s[0] = s[0].max(w.vel[0].abs() + c);
            s[1] = s[1].max(w.vel[1].abs() + c);
        }
        Ok(s)
    }
}
