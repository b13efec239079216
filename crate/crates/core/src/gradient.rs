//! First moments built from interface values, and the Taylor updates that
//! advance those interface values with GRP data.

use crate::error::{Location, Result, SolverError, Stage};
use crate::grp::GrpPoint;

/// `Δu_j = (û_{j+1/2} - û_{j-1/2}) / h` for every cell bounded by two entries of `iv`.
pub fn moments_1d<const N: usize>(iv: &[[f64; N]], h: f64) -> Vec<[f64; N]> {
    iv.windows(2).map(|w| std::array::from_fn(|k| (w[1][k] - w[0][k]) / h)).collect()
}

/// Same as [`moments_1d`] but multiplied by `h`, the form the HWENO kernels take.
pub fn moments_1d_scaled<const N: usize>(iv: &[[f64; N]], out: &mut [[f64; N]]) {
    for (o, w) in out.iter_mut().zip(iv.windows(2)) {
        *o = std::array::from_fn(|k| w[1][k] - w[0][k]);
    }
}

/// `û^{n+1/2} = u^n + (k/2) (du/dt)^n`.
#[inline(always)]
pub fn interface_value_intermediate<const N: usize>(p: &GrpPoint<N>, k: f64) -> [f64; N] {
    std::array::from_fn(|c| p.u_star[c] + 0.5 * k * p.dudt_star[c])
}

/// `û^{n+1} = u^n + k (du/dt)^{n+1/2}`: value from the first stage, derivative
/// from the second.
#[inline(always)]
pub fn interface_value_final<const N: usize>(first: &GrpPoint<N>, second: &GrpPoint<N>, k: f64) -> [f64; N] {
    std::array::from_fn(|c| first.u_star[c] + k * second.dudt_star[c])
}

/// Interface value update for either stage, with an admissibility check.
pub fn interface_values_stage<const N: usize>(
    first: &GrpPoint<N>,
    second: Option<&GrpPoint<N>>,
    k: f64,
    gamma: f64,
    location: Location,
) -> Result<[f64; N]> {
    let (u, stage) = match second {
        None => (interface_value_intermediate(first, k), Stage::Intermediate),
        Some(s) => (interface_value_final(first, s, k), Stage::Final),
    };
    check_state(&u, gamma, location, stage)?;
    Ok(u)
}

/// Positive density and pressure for a 1D or 2D conserved state.
#[inline]
pub fn check_state<const N: usize>(u: &[f64; N], gamma: f64, location: Location, stage: Stage) -> Result<()> {
    let rho = u[0];
    let kinetic: f64 = (1..N - 1).map(|c| u[c] * u[c]).sum::<f64>() / (2.0 * rho);
    let p = (gamma - 1.0) * (u[N - 1] - kinetic);
    if rho > 0.0 && p > 0.0 && p.is_finite() {
        Ok(())
    } else {
        Err(SolverError::Positivity { location, stage, rho, p })
    }
}

/// Scaled 2D moments `(h_x Δ_x u, h_y Δ_y u)` of one cell from the two Gauss
/// values on each of its four edges (weights 1/2, 1/2).
#[inline(always)]
pub fn moments_2d<const N: usize>(
    west: [&[f64; N]; 2],
    east: [&[f64; N]; 2],
    south: [&[f64; N]; 2],
    north: [&[f64; N]; 2],
) -> ([f64; N], [f64; N]) {
    let dx = std::array::from_fn(|c| 0.5 * (east[0][c] + east[1][c]) - 0.5 * (west[0][c] + west[1][c]));
    let dy = std::array::from_fn(|c| 0.5 * (north[0][c] + north[1][c]) - 0.5 * (south[0][c] + south[1][c]));
    (dx, dy)
}
