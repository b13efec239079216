//! Independent oracles shared by the integration tests. The functions in
//! this file do not call the library's kernels; `kernels` compares against them.

#![allow(dead_code)]

pub mod kernels;

use grp_hweno::euler::Primitive1;

/// Polynomial with coefficients in increasing degree.
#[derive(Debug, Clone)]
pub struct Poly(pub Vec<f64>);

impl Poly {
    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly(self.0.iter().enumerate().skip(1).map(|(k, c)| k as f64 * c).collect())
    }

    pub fn antiderivative(&self) -> Poly {
        let mut c = vec![0.0];
        c.extend(self.0.iter().enumerate().map(|(k, a)| a / (k as f64 + 1.0)));
        Poly(c)
    }

    /// Exact mean over `[a, b]`.
    pub fn mean(&self, a: f64, b: f64) -> f64 {
        let p = self.antiderivative();
        (p.eval(b) - p.eval(a)) / (b - a)
    }

    pub fn scale(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |m, c| m.max(c.abs())).max(1e-300)
    }
}

/// Gauss-Legendre with three points on `[a, b]`; exact through degree 5.
pub fn gauss3(a: f64, b: f64, f: impl Fn(f64) -> f64) -> f64 {
    let r = (0.6_f64).sqrt();
    let (m, hw) = (0.5 * (a + b), 0.5 * (b - a));
    hw * (5.0 * f(m - hw * r) + 8.0 * f(m) + 5.0 * f(m + hw * r)) / 9.0
}

/// Solve a small dense system by Gaussian elimination with partial pivoting.
pub fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs())).unwrap();
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|k| a[i][k] * x[k]).sum();
        x[i] = (b[i] - s) / a[i][i];
    }
    x
}

/// The three Hermite candidate quadratics on a unit cell centred at 0, from
/// cell means `l, c, r` over `[-3/2,-1/2], [-1/2,1/2], [1/2,3/2]` and scaled
/// moments `ml = p(-1/2) - p(-3/2)`, `mr = p(3/2) - p(1/2)`.
pub fn hermite_candidate_polys(l: f64, c: f64, r: f64, ml: f64, mr: f64) -> [Poly; 3] {
    let mean_row = |a: f64, b: f64| -> Vec<f64> { (0..3).map(|k| (b.powi(k + 1) - a.powi(k + 1)) / ((k + 1) as f64 * (b - a))).collect() };
    let diff_row = |a: f64, b: f64| -> Vec<f64> { (0..3).map(|k| b.powi(k) - a.powi(k)).collect() };
    let left = mean_row(-1.5, -0.5);
    let mid = mean_row(-0.5, 0.5);
    let right = mean_row(0.5, 1.5);
    [
        Poly(solve_dense(vec![left.clone(), mid.clone(), diff_row(-1.5, -0.5)], vec![l, c, ml])),
        Poly(solve_dense(vec![left, mid.clone(), right.clone()], vec![l, c, r])),
        Poly(solve_dense(vec![mid, right, diff_row(0.5, 1.5)], vec![c, r, mr])),
    ]
}

/// `Σ_{l=1,2} ∫_cell (d^l p / dx^l)^2 dx` on the unit cell, by quadrature.
pub fn smoothness_by_quadrature(p: &Poly) -> f64 {
    let d1 = p.derivative();
    let d2 = d1.derivative();
    gauss3(-0.5, 0.5, |x| d1.eval(x).powi(2)) + gauss3(-0.5, 0.5, |x| d2.eval(x).powi(2))
}

/// One-wave function of the exact Riemann problem, written out from the
/// shock and rarefaction relations.
fn wave(p: f64, rho: f64, pk: f64, gamma: f64) -> f64 {
    if p > pk {
        let a = 2.0 / ((gamma + 1.0) * rho);
        let b = (gamma - 1.0) / (gamma + 1.0) * pk;
        (p - pk) * (a / (p + b)).sqrt()
    } else {
        let c = (gamma * pk / rho).sqrt();
        2.0 * c / (gamma - 1.0) * ((p / pk).powf((gamma - 1.0) / (2.0 * gamma)) - 1.0)
    }
}

pub fn pressure_residual(p: f64, wl: &Primitive1, wr: &Primitive1, gamma: f64) -> f64 {
    wave(p, wl.rho, wl.p, gamma) + wave(p, wr.rho, wr.p, gamma) + wr.vel[0] - wl.vel[0]
}

/// Star pressure and velocity by plain bisection.
pub fn star_by_bisection(wl: &Primitive1, wr: &Primitive1, gamma: f64) -> (f64, f64) {
    let (mut lo, mut hi) = (1e-14, 1.0);
    while pressure_residual(hi, wl, wr, gamma) < 0.0 {
        hi *= 2.0;
    }
    for _ in 0..400 {
        let mid = 0.5 * (lo + hi);
        if pressure_residual(mid, wl, wr, gamma) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo <= 1e-16 * hi {
            break;
        }
    }
    let p = 0.5 * (lo + hi);
    let u = 0.5 * (wl.vel[0] + wr.vel[0]) + 0.5 * (wave(p, wr.rho, wr.p, gamma) - wave(p, wl.rho, wl.p, gamma));
    (p, u)
}

/// Conserved 1D flux written directly from the primitive relations.
pub fn flux_1d(u: &[f64; 3], gamma: f64) -> [f64; 3] {
    let v = u[1] / u[0];
    let p = (gamma - 1.0) * (u[2] - 0.5 * u[0] * v * v);
    [u[1], u[1] * v + p, (u[2] + p) * v]
}

/// Conserved 2D flux along x.
pub fn flux_2d_x(u: &[f64; 4], gamma: f64) -> [f64; 4] {
    let (vx, vy) = (u[1] / u[0], u[2] / u[0]);
    let p = (gamma - 1.0) * (u[3] - 0.5 * u[0] * (vx * vx + vy * vy));
    [u[1], u[1] * vx + p, u[2] * vx, (u[3] + p) * vx]
}

/// Central finite-difference Jacobian.
pub fn fd_jacobian<const N: usize>(f: impl Fn(&[f64; N]) -> [f64; N], u: &[f64; N]) -> [[f64; N]; N] {
    let mut jac = [[0.0; N]; N];
    for k in 0..N {
        let step = 1e-6 * u[k].abs().max(1.0);
        let mut up = *u;
        let mut dn = *u;
        up[k] += step;
        dn[k] -= step;
        let (fp, fm) = (f(&up), f(&dn));
        for i in 0..N {
            jac[i][k] = (fp[i] - fm[i]) / (2.0 * step);
        }
    }
    jac
}

/// Largest `|rho(i, j) - rho(j, i)|` over the interior of a square grid.
pub fn transposition_asymmetry(field: &grp_hweno::recon2d::CellField2d) -> f64 {
    use grp_hweno::recon::GHOST;
    let n = field.nx.min(field.ny);
    let mut worst: f64 = 0.0;
    for j in 0..n {
        for i in 0..n {
            let a = field.averages[field.idx(i + GHOST, j + GHOST)][0];
            let b = field.averages[field.idx(j + GHOST, i + GHOST)][0];
            worst = worst.max((a - b).abs());
        }
    }
    worst
}
