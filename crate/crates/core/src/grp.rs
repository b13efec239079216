//! Acoustic generalized Riemann problem (GRP) solver.
//!
//! The interface value is the exact Riemann solution of the two one-sided
//! limits at `x/t = 0`. Its time derivative follows from the frozen Jacobian
//! `A(u*)`: both one-sided slopes are projected onto the characteristic
//! fields of `A(u*)`, each field takes the slope from its upwind side
//! (right-moving fields from the left trace, left-moving from the right, the
//! arithmetic mean for a zero speed) and `du/dt = -A(u*) (du/dx)_upwind`.

use crate::error::Result;
use crate::euler::{d1, d2, Axis, Primitive};
use crate::linalg::{matvec, Mat};
use crate::riemann;

/// Left/right limiting values and spatial derivatives at an interface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReconTrace<const N: usize> {
    pub u_minus: [f64; N],
    pub u_plus: [f64; N],
    pub dudx_minus: [f64; N],
    pub dudx_plus: [f64; N],
}

/// Instantaneous interface value and its time derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrpPoint<const N: usize> {
    pub u_star: [f64; N],
    pub dudt_star: [f64; N],
}

/// A GRP point together with the normal flux `f(u*)` and its time
/// derivative `(df/du)(u*) (du/dt)*`, the two ingredients of the stage fluxes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrpFlux<const N: usize> {
    pub point: GrpPoint<N>,
    pub flux: [f64; N],
    pub dfdt: [f64; N],
}

impl<const N: usize> Default for GrpFlux<N> {
    fn default() -> Self {
        GrpFlux {
            point: GrpPoint { u_star: [0.0; N], dudt_star: [0.0; N] },
            flux: [0.0; N],
            dfdt: [0.0; N],
        }
    }
}

#[inline(always)]
fn upwind<const N: usize>(lambdas: &[f64; N], left: &[f64; N], right: &[f64; N]) -> [f64; N] {
    std::array::from_fn(|k| {
        let l = lambdas[k];
        if l > 0.0 {
            left[k]
        } else if l < 0.0 {
            right[k]
        } else {
            0.5 * (left[k] + right[k])
        }
    })
}

/// Slope assembled field by field from the upwind side of `A`'s eigensystem.
pub fn upwind_slope<const N: usize>(
    lambdas: &[f64; N],
    left_vecs: &Mat<N>,
    right_vecs: &Mat<N>,
    minus: &[f64; N],
    plus: &[f64; N],
) -> [f64; N] {
    let a = upwind(lambdas, &matvec(left_vecs, minus), &matvec(left_vecs, plus));
    matvec(right_vecs, &a)
}

/// One-dimensional acoustic GRP.
pub fn grp_solve(trace: &ReconTrace<3>, gamma: f64) -> Result<GrpPoint<3>> {
    Ok(grp_flux_1d(trace, gamma)?.point)
}

pub fn grp_flux_1d(trace: &ReconTrace<3>, gamma: f64) -> Result<GrpFlux<3>> {
    let wl = d1::cons_to_prim(&trace.u_minus, gamma)?;
    let wr = d1::cons_to_prim(&trace.u_plus, gamma)?;
    let star = riemann::solve_star_unchecked(&wl, &wr, gamma)?;
    let (ws, _) = riemann::sample_star(&wl, &wr, &star, gamma, 0.0);
    let es = d1::eigensystem_prim(&ws, gamma);

    let a = upwind(
        &es.lambdas,
        &matvec(&es.left, &trace.dudx_minus),
        &matvec(&es.left, &trace.dudx_plus),
    );
    // du/dt = -R diag(lambda) a, df/dt = A du/dt = -R diag(lambda^2) a
    let la: [f64; 3] = std::array::from_fn(|k| -es.lambdas[k] * a[k]);
    let l2a: [f64; 3] = std::array::from_fn(|k| es.lambdas[k] * la[k]);
    Ok(GrpFlux {
        point: GrpPoint {
            u_star: d1::prim_to_cons_unchecked(&ws, gamma),
            dudt_star: matvec(&es.right, &la),
        },
        flux: d1::flux_prim(&ws, gamma),
        dfdt: matvec(&es.right, &l2a),
    })
}

/// Two-dimensional acoustic GRP at an edge point, written in the frame where
/// the edge normal is the x axis (callers rotate y-normal edges first).
///
/// `trace` carries normal derivatives; `dudt_minus`/`dudt_plus` are the
/// one-sided tangential derivatives. The tangential contribution
/// `-B(u*) (du/dy)_upwind` uses the same normal-characteristic upwinding.
pub fn grp_flux_2d(
    trace: &ReconTrace<4>,
    tangential_minus: &[f64; 4],
    tangential_plus: &[f64; 4],
    gamma: f64,
) -> Result<GrpFlux<4>> {
    let wl = d2::cons_to_prim(&trace.u_minus, gamma)?;
    let wr = d2::cons_to_prim(&trace.u_plus, gamma)?;
    let ws = riemann::sample_normal(&wl, &wr, gamma, 0.0)?;
    let es = d2::eigensystem_prim(&ws, gamma, Axis::X);

    let a = upwind(
        &es.lambdas,
        &matvec(&es.left, &trace.dudx_minus),
        &matvec(&es.left, &trace.dudx_plus),
    );
    let st = upwind_slope(&es.lambdas, &es.left, &es.right, tangential_minus, tangential_plus);
    let bt = matvec(&d2::jacobian_prim(&ws, gamma, Axis::Y), &st);
    let la: [f64; 4] = std::array::from_fn(|k| -es.lambdas[k] * a[k]);
    let normal = matvec(&es.right, &la);
    let dudt: [f64; 4] = std::array::from_fn(|k| normal[k] - bt[k]);

    let ldu = matvec(&es.left, &dudt);
    let lldu: [f64; 4] = std::array::from_fn(|k| es.lambdas[k] * ldu[k]);
    Ok(GrpFlux {
        point: GrpPoint { u_star: d2::prim_to_cons_unchecked(&ws, gamma), dudt_star: dudt },
        flux: d2::flux_prim(&ws, gamma, Axis::X),
        dfdt: matvec(&es.right, &lldu),
    })
}

/// Convenience wrapper taking primitive one-sided states and zero slopes.
pub fn riemann_value_1d(wl: &Primitive<1>, wr: &Primitive<1>, gamma: f64) -> Result<[f64; 3]> {
    let w = riemann::sample(wl, wr, gamma, 0.0)?;
    Ok(d1::prim_to_cons_unchecked(&w, gamma))
}
