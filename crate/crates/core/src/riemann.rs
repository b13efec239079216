//! Exact Riemann solver for the ideal-gas Euler equations.
//!
//! The star pressure is the root of the two-wave pressure function, found by
//! a safeguarded Newton iteration started from the two-rarefaction estimate.
//! Whenever a Newton iterate leaves the current bracketing interval the step
//! is replaced by bisection.

use crate::error::{Result, SolverError};
use crate::euler::{Primitive, Primitive1, Primitive2};

pub const PRESSURE_TOLERANCE: f64 = 1e-12;
pub const MAX_ITERATIONS: usize = 100;

/// Pressure and normal velocity between the two nonlinear waves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StarState {
    pub p: f64,
    pub u: f64,
    pub iterations: usize,
}

/// Which side of the contact a sampled point lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy)]
struct Gas {
    gamma: f64,
    /// (gamma - 1) / (2 gamma)
    z: f64,
    /// (gamma - 1) / (gamma + 1)
    g6: f64,
}

impl Gas {
    fn new(gamma: f64) -> Self {
        Gas {
            gamma,
            z: (gamma - 1.0) / (2.0 * gamma),
            g6: (gamma - 1.0) / (gamma + 1.0),
        }
    }

    /// Value and derivative of the single-wave function f_K(p).
    #[inline]
    fn wave(&self, p: f64, rho: f64, pk: f64, ck: f64) -> (f64, f64) {
        if p > pk {
            let a = 2.0 / ((self.gamma + 1.0) * rho);
            let b = self.g6 * pk;
            let q = (a / (p + b)).sqrt();
            ((p - pk) * q, q * (1.0 - 0.5 * (p - pk) / (b + p)))
        } else {
            let ratio = p / pk;
            let pw = ratio.powf(self.z);
            let f = 2.0 * ck / (self.gamma - 1.0) * (pw - 1.0);
            // d/dp: (1 / (rho c)) (p/pk)^(-(gamma+1)/(2 gamma)) = pw / (ratio * rho * c)
            (f, pw / (ratio * rho * ck))
        }
    }
}

/// The two-wave pressure function `f_L(p) + f_R(p) + (u_R - u_L)`.
pub fn pressure_function(p: f64, wl: &Primitive1, wr: &Primitive1, gamma: f64) -> f64 {
    let gas = Gas::new(gamma);
    let (fl, _) = gas.wave(p, wl.rho, wl.p, wl.sound_speed(gamma));
    let (fr, _) = gas.wave(p, wr.rho, wr.p, wr.sound_speed(gamma));
    fl + fr + (wr.vel[0] - wl.vel[0])
}

/// Solve for the star-region pressure and velocity.
pub fn solve_star(wl: &Primitive1, wr: &Primitive1, gamma: f64) -> Result<StarState> {
    wl.validate()?;
    wr.validate()?;
    crate::euler::check_gamma(gamma)?;
    solve_star_unchecked(wl, wr, gamma)
}

pub(crate) fn solve_star_unchecked(wl: &Primitive1, wr: &Primitive1, gamma: f64) -> Result<StarState> {
    let gas = Gas::new(gamma);
    let (cl, cr) = (wl.sound_speed(gamma), wr.sound_speed(gamma));
    let (ul, ur) = (wl.vel[0], wr.vel[0]);
    let du = ur - ul;

    let margin = 2.0 * (cl + cr) / (gamma - 1.0) - du;
    if margin <= 0.0 {
        return Err(SolverError::Vacuum { deficit: -margin });
    }

    // Two-rarefaction estimate; strictly positive whenever the data are
    // vacuum-free.
    let num = cl + cr - 0.5 * (gamma - 1.0) * du;
    let den = cl / wl.p.powf(gas.z) + cr / wr.p.powf(gas.z);
    let mut p = (num / den).powf(1.0 / gas.z);
    if !(p > 0.0) || !p.is_finite() {
        p = 0.5 * (wl.p + wr.p);
    }

    let mut lo = 0.0_f64;
    let mut hi = f64::INFINITY;
    let mut residual = f64::NAN;
    for it in 1..=MAX_ITERATIONS {
        let (fl, dfl) = gas.wave(p, wl.rho, wl.p, cl);
        let (fr, dfr) = gas.wave(p, wr.rho, wr.p, cr);
        let f = fl + fr + du;
        residual = f;
        if f.abs() <= PRESSURE_TOLERANCE {
            return Ok(StarState { p, u: 0.5 * (ul + ur) + 0.5 * (fr - fl), iterations: it });
        }
        if f < 0.0 {
            lo = lo.max(p);
        } else {
            hi = hi.min(p);
        }
        let mut next = p - f / (dfl + dfr);
        if !(next > lo && next < hi) || !next.is_finite() {
            next = if hi.is_finite() { 0.5 * (lo + hi) } else { 2.0 * p };
        }
        if (next - p).abs() <= 4.0 * f64::EPSILON * p {
            // Stalled at round-off level.
            let (fl, _) = gas.wave(next, wl.rho, wl.p, cl);
            let (fr, _) = gas.wave(next, wr.rho, wr.p, cr);
            return Ok(StarState { p: next, u: 0.5 * (ul + ur) + 0.5 * (fr - fl), iterations: it });
        }
        p = next;
    }
    Err(SolverError::NoConvergence { iterations: MAX_ITERATIONS, residual })
}

/// Solution of a Riemann problem, sampled along rays `x / t = xi`.
#[derive(Debug, Clone, Copy)]
pub struct RiemannSolution {
    pub left: Primitive1,
    pub right: Primitive1,
    pub star: StarState,
    pub gamma: f64,
}

impl RiemannSolution {
    pub fn new(left: Primitive1, right: Primitive1, gamma: f64) -> Result<Self> {
        let star = solve_star(&left, &right, gamma)?;
        Ok(RiemannSolution { left, right, star, gamma })
    }

    pub fn sample(&self, xi: f64) -> Primitive1 {
        sample_star(&self.left, &self.right, &self.star, self.gamma, xi).0
    }

    /// Density immediately behind the right-facing wave (star-right region).
    pub fn star_density_right(&self) -> f64 {
        star_density(&self.right, self.star.p, self.gamma)
    }

    pub fn star_density_left(&self) -> f64 {
        star_density(&self.left, self.star.p, self.gamma)
    }

    /// Speed of the right wave if it is a shock.
    pub fn right_shock_speed(&self) -> Option<f64> {
        let w = &self.right;
        (self.star.p > w.p).then(|| {
            let g = self.gamma;
            w.vel[0] + w.sound_speed(g) * ((g + 1.0) / (2.0 * g) * self.star.p / w.p + (g - 1.0) / (2.0 * g)).sqrt()
        })
    }

    pub fn left_shock_speed(&self) -> Option<f64> {
        let w = &self.left;
        (self.star.p > w.p).then(|| {
            let g = self.gamma;
            w.vel[0] - w.sound_speed(g) * ((g + 1.0) / (2.0 * g) * self.star.p / w.p + (g - 1.0) / (2.0 * g)).sqrt()
        })
    }
}

fn star_density(w: &Primitive1, p_star: f64, gamma: f64) -> f64 {
    let ratio = p_star / w.p;
    if p_star > w.p {
        let g6 = (gamma - 1.0) / (gamma + 1.0);
        w.rho * (ratio + g6) / (g6 * ratio + 1.0)
    } else {
        w.rho * ratio.powf(1.0 / gamma)
    }
}

/// Sample the self-similar solution at `xi`.
pub fn sample(wl: &Primitive1, wr: &Primitive1, gamma: f64, xi: f64) -> Result<Primitive1> {
    let star = solve_star(wl, wr, gamma)?;
    Ok(sample_star(wl, wr, &star, gamma, xi).0)
}

/// Sample given an already solved star state. Also reports the side of the
/// contact (`xi <= u*` is the left side).
pub fn sample_star(wl: &Primitive1, wr: &Primitive1, star: &StarState, gamma: f64, xi: f64) -> (Primitive1, Side) {
    let g = gamma;
    let z = (g - 1.0) / (2.0 * g);
    let (ps, us) = (star.p, star.u);
    if xi <= us {
        let w = wl;
        let c = w.sound_speed(g);
        let u = w.vel[0];
        let out = if ps > w.p {
            let s = u - c * ((g + 1.0) / (2.0 * g) * ps / w.p + z).sqrt();
            if xi <= s {
                *w
            } else {
                Primitive { rho: star_density(w, ps, g), vel: [us], p: ps }
            }
        } else {
            let head = u - c;
            let cs = c * (ps / w.p).powf(z);
            let tail = us - cs;
            if xi <= head {
                *w
            } else if xi > tail {
                Primitive { rho: star_density(w, ps, g), vel: [us], p: ps }
            } else {
                let k = 2.0 / (g + 1.0);
                let cf = k * (c + 0.5 * (g - 1.0) * (u - xi));
                let ratio = cf / c;
                Primitive {
                    rho: w.rho * ratio.powf(2.0 / (g - 1.0)),
                    vel: [k * (c + 0.5 * (g - 1.0) * u + xi)],
                    p: w.p * ratio.powf(2.0 * g / (g - 1.0)),
                }
            }
        };
        (out, Side::Left)
    } else {
        let w = wr;
        let c = w.sound_speed(g);
        let u = w.vel[0];
        let out = if ps > w.p {
            let s = u + c * ((g + 1.0) / (2.0 * g) * ps / w.p + z).sqrt();
            if xi >= s {
                *w
            } else {
                Primitive { rho: star_density(w, ps, g), vel: [us], p: ps }
            }
        } else {
            let head = u + c;
            let cs = c * (ps / w.p).powf(z);
            let tail = us + cs;
            if xi >= head {
                *w
            } else if xi <= tail {
                Primitive { rho: star_density(w, ps, g), vel: [us], p: ps }
            } else {
                let k = 2.0 / (g + 1.0);
                let cf = k * (c - 0.5 * (g - 1.0) * (u - xi));
                let ratio = cf / c;
                Primitive {
                    rho: w.rho * ratio.powf(2.0 / (g - 1.0)),
                    vel: [k * (-c + 0.5 * (g - 1.0) * u + xi)],
                    p: w.p * ratio.powf(2.0 * g / (g - 1.0)),
                }
            }
        };
        (out, Side::Right)
    }
}

/// Sample a 2D Riemann problem normal to an edge: `vel[0]` is the normal
/// velocity, `vel[1]` the tangential one, which is carried across the
/// acoustic waves and jumps only at the contact.
pub fn sample_normal(wl: &Primitive2, wr: &Primitive2, gamma: f64, xi: f64) -> Result<Primitive2> {
    let l1 = Primitive { rho: wl.rho, vel: [wl.vel[0]], p: wl.p };
    let r1 = Primitive { rho: wr.rho, vel: [wr.vel[0]], p: wr.p };
    let star = solve_star_unchecked(&l1, &r1, gamma)?;
    let (w, side) = sample_star(&l1, &r1, &star, gamma, xi);
    let vt = match side {
        Side::Left => wl.vel[1],
        Side::Right => wr.vel[1],
    };
    Ok(Primitive { rho: w.rho, vel: [w.vel[0], vt], p: w.p })
}
