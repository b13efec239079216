//! Two-stage fourth-order GRP time stepping in one and two dimensions.
//!
//! Each step reconstructs twice: once at `t^n` and once at `t^n + k/2`.
//! The intermediate stage uses `f* = f(u^n) + (k/4) (df/dt)^n`; the final
//! stage uses `f^4 = f(u^n) + (k/2) [(df/dt)^n / 3 + 2 (df/dt)^{n+1/2} / 3]`.
//! Interface values advance by Taylor expansion with the GRP time
//! derivatives, and the moments of the next reconstruction come from them.

pub mod bc;
mod one_d;
mod two_d;

pub use bc::{Boundary1d, Boundary2d, ExactFn2};
pub use one_d::Solver1d;
pub use two_d::Solver2d;

use crate::error::{Result, SolverError};

/// Time step `cfl * h / s_max`.
pub fn compute_dt(cfl: f64, h: f64, max_speed: f64) -> Result<f64> {
    if !(max_speed.is_finite() && max_speed > 0.0) {
        return Err(SolverError::Domain(format!("non-positive or non-finite wave speed {max_speed}")));
    }
    Ok(cfl * h / max_speed)
}

/// Time step `cfl / (s_x/h_x + s_y/h_y)`.
pub fn compute_dt_2d(cfl: f64, hx: f64, hy: f64, speeds: [f64; 2]) -> Result<f64> {
    let rate = speeds[0] / hx + speeds[1] / hy;
    if !(rate.is_finite() && rate > 0.0) {
        return Err(SolverError::Domain(format!("non-positive or non-finite wave speeds {speeds:?}")));
    }
    Ok(cfl / rate)
}

/// Shorten `k` so that `t + k` lands exactly on `t_end`.
pub fn clip_dt(t: f64, k: f64, t_end: f64) -> f64 {
    let rest = t_end - t;
    // avoid a sliver step from round-off in the accumulated time
    if k >= rest || rest - k <= 1e-12 * t_end.abs().max(1.0) {
        rest
    } else {
        k
    }
}

/// Bookkeeping for one completed step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepReport {
    pub dt: f64,
    /// Reconstruction passes performed during the step.
    pub reconstructions: usize,
}

/// Summary of a run to a target time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunSummary {
    pub steps: usize,
    pub t: f64,
    /// `|total - (initial - boundary outflow)| / |initial|`, worst component.
    pub conservation_drift: f64,
    /// Largest reconstruction count seen in a single step.
    pub max_reconstructions_per_step: usize,
    pub min_reconstructions_per_step: usize,
}

pub(crate) fn relative_drift<const N: usize>(initial: &[f64; N], now: &[f64; N], outflow: &[f64; N]) -> f64 {
    let mut worst: f64 = 0.0;
    let scale = initial.iter().fold(0.0_f64, |m, v| m.max(v.abs())).max(f64::MIN_POSITIVE);
    for c in 0..N {
        worst = worst.max((now[c] - (initial[c] - outflow[c])).abs() / scale);
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn dt_examples() {
        let s = 1.4f64.sqrt();
        assert_relative_eq!(compute_dt(0.6, 0.01, s).unwrap(), 0.006 / s, epsilon = 1e-16);
        assert_relative_eq!(compute_dt(0.6, 0.01, 1.0 + s).unwrap(), 0.006 / (1.0 + s), epsilon = 1e-16);
        assert_relative_eq!(clip_dt(0.995, 0.01, 1.0), 0.005, epsilon = 1e-15);
        assert_eq!(clip_dt(0.5, 0.01, 1.0), 0.01);
        assert!(compute_dt(0.6, 0.01, 0.0).is_err());
        assert!(compute_dt(0.6, 0.01, f64::NAN).is_err());
        assert_relative_eq!(compute_dt_2d(0.6, 0.01, 0.02, [1.0, 2.0]).unwrap(), 0.6 / 200.0, epsilon = 1e-16);
    }
}
