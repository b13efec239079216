//! Seeded kernel checks against the oracles in `common`. Each returns the
//! worst error seen over its samples.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use grp_hweno::euler::{d1, d2, Axis, Primitive1, Primitive2};
use grp_hweno::gradient::{moments_1d, moments_1d_scaled};
use grp_hweno::linalg::{identity, matmul, max_abs, max_abs_diff, Mat};
use grp_hweno::recon::hweno::{self, HermiteWindow, LINEAR_WEIGHTS};
use grp_hweno::recon2d::{tangential_derivative_gauss, tangential_derivative_gauss_mirrored, GAUSS_XI};
use grp_hweno::riemann;

use super::{fd_jacobian, flux_1d, flux_2d_x, hermite_candidate_polys, pressure_residual, smoothness_by_quadrature, star_by_bisection, Poly};

pub struct Check {
    pub name: &'static str,
    pub worst: f64,
    pub tol: f64,
}

impl Check {
    pub fn ok(&self) -> bool {
        self.worst <= self.tol
    }
}

fn random_poly(rng: &mut ChaCha8Rng, degree: usize) -> Poly {
    Poly((0..=degree).map(|_| rng.gen_range(-1.0..1.0)).collect())
}

fn window_from_poly(p: &Poly, h: f64) -> HermiteWindow {
    HermiteWindow {
        left: p.mean(-1.5 * h, -0.5 * h),
        centre: p.mean(-0.5 * h, 0.5 * h),
        right: p.mean(0.5 * h, 1.5 * h),
        moment_left: p.eval(-0.5 * h) - p.eval(-1.5 * h),
        moment_right: p.eval(1.5 * h) - p.eval(0.5 * h),
    }
}

pub fn big_stencil_exactness(rng: &mut ChaCha8Rng, samples: usize) -> Check {
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let degree = rng.gen_range(0..=4);
        let p = random_poly(rng, degree);
        let h = rng.gen_range(0.01..1.0);
        let w = window_from_poly(&p, h);
        worst = worst.max((hweno::big_stencil(&w) - p.eval(0.5 * h)).abs());
        worst = worst.max((hweno::big_stencil(&w.mirrored()) - p.eval(-0.5 * h)).abs());
    }
    Check { name: "HWENO big stencil exact on degree <= 4", worst, tol: 1e-12 }
}

pub fn weight_normalisation(rng: &mut ChaCha8Rng, samples: usize) -> Check {
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let w = HermiteWindow {
            left: rng.gen_range(-1.0..1.0),
            centre: rng.gen_range(-1.0..1.0),
            right: rng.gen_range(-1.0..1.0),
            moment_left: rng.gen_range(-1.0..1.0),
            moment_right: rng.gen_range(-1.0..1.0),
        }
        .scaled(10f64.powf(rng.gen_range(-8.0..8.0)));
        let omega = hweno::nonlinear_weights_z(hweno::smoothness_indicators(&w), LINEAR_WEIGHTS, 1e-40);
        worst = worst.max((omega.iter().sum::<f64>() - 1.0).abs());
        if omega.iter().any(|o| !(*o >= 0.0)) {
            worst = f64::INFINITY;
        }
    }
    Check { name: "nonlinear weights sum to one", worst, tol: 1e-14 }
}

pub fn smoothness_vs_quadrature(rng: &mut ChaCha8Rng, samples: usize) -> Check {
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let d: [f64; 5] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let w = HermiteWindow { left: d[0], centre: d[1], right: d[2], moment_left: d[3], moment_right: d[4] };
        let polys = hermite_candidate_polys(d[0], d[1], d[2], d[3], d[4]);
        let betas = hweno::smoothness_indicators(&w);
        let values = hweno::candidates(&w);
        for r in 0..3 {
            let b = smoothness_by_quadrature(&polys[r]);
            worst = worst.max((betas[r] - b).abs() / b.max(1.0));
            worst = worst.max((values[r] - polys[r].eval(0.5)).abs());
        }
    }
    Check { name: "smoothness indicators match quadrature", worst, tol: 1e-12 }
}

pub fn tangential_derivative_exactness(rng: &mut ChaCha8Rng, samples: usize) -> Check {
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let degree = rng.gen_range(0..=4);
        let p = random_poly(rng, degree);
        let h = rng.gen_range(0.05..1.0);
        let w: [f64; 5] = std::array::from_fn(|k| {
            let c = (k as f64 - 2.0) * h;
            p.mean(c - 0.5 * h, c + 0.5 * h)
        });
        let dp = p.derivative();
        let scale = p.scale() / h;
        worst = worst.max((tangential_derivative_gauss(w, h) - dp.eval(GAUSS_XI * h)).abs() / scale);
        worst = worst.max((tangential_derivative_gauss_mirrored(w, h) - dp.eval(-GAUSS_XI * h)).abs() / scale);
    }
    Check { name: "Gauss-point tangential derivative exact on degree <= 4", worst, tol: 1e-12 }
}

/// Dyadic data keep every difference and partial sum exact, so the
/// telescoped sum must agree bit for bit.
pub fn telescoping(rng: &mut ChaCha8Rng, samples: usize) -> Check {
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let n = rng.gen_range(2..200);
        let iv: Vec<[f64; 3]> = (0..n).map(|_| std::array::from_fn(|_| rng.gen_range(-1 << 20..1 << 20) as f64 / 1024.0)).collect();
        let h = 2f64.powi(-rng.gen_range(0..10));
        let mut scaled = vec![[0.0; 3]; n - 1];
        moments_1d_scaled(&iv, &mut scaled);
        let plain = moments_1d(&iv, h);
        for c in 0..3 {
            let total: f64 = scaled.iter().map(|m| m[c]).sum();
            let total_h: f64 = plain.iter().map(|m| m[c] * h).sum();
            worst = worst.max((total - (iv[n - 1][c] - iv[0][c])).abs());
            worst = worst.max((total_h - (iv[n - 1][c] - iv[0][c])).abs());
        }
    }
    Check { name: "moment sums telescope exactly", worst, tol: 0.0 }
}

fn random_prim1(rng: &mut ChaCha8Rng) -> Primitive1 {
    Primitive1 { rho: rng.gen_range(0.1..10.0), vel: [rng.gen_range(-5.0..5.0)], p: rng.gen_range(0.1..100.0) }
}

fn random_prim2(rng: &mut ChaCha8Rng) -> Primitive2 {
    Primitive2 { rho: rng.gen_range(0.1..10.0), vel: [rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)], p: rng.gen_range(0.1..100.0) }
}

fn rebuild<const N: usize>(right: &Mat<N>, lambdas: &[f64; N], left: &Mat<N>) -> Mat<N> {
    let mut rl = *right;
    for row in rl.iter_mut() {
        for (c, v) in row.iter_mut().enumerate() {
            *v *= lambdas[c];
        }
    }
    matmul(&rl, left)
}

fn rel_diff<const N: usize>(a: &Mat<N>, b: &Mat<N>) -> f64 {
    max_abs_diff(a, b) / max_abs(b).max(1.0)
}

pub fn eigensystem_inverse(rng: &mut ChaCha8Rng, samples: usize) -> Check {
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let e = d1::eigensystem_prim(&random_prim1(rng), 1.4);
        worst = worst.max(max_abs_diff(&matmul(&e.left, &e.right), &identity()));
        let w2 = random_prim2(rng);
        for axis in [Axis::X, Axis::Y] {
            let e = d2::eigensystem_prim(&w2, 1.4, axis);
            worst = worst.max(max_abs_diff(&matmul(&e.left, &e.right), &identity()));
        }
    }
    Check { name: "eigensystem L R = I", worst, tol: 1e-12 }
}

pub fn jacobian_vs_differences(rng: &mut ChaCha8Rng, samples: usize) -> Check {
    let gamma = 1.4;
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let w = random_prim1(rng);
        let u = d1::prim_to_cons(&w, gamma).unwrap();
        let e = d1::eigensystem_prim(&w, gamma);
        let fd = fd_jacobian(|v: &[f64; 3]| flux_1d(v, gamma), &u);
        worst = worst.max(rel_diff(&rebuild(&e.right, &e.lambdas, &e.left), &fd));

        let w2 = random_prim2(rng);
        let u2 = d2::prim_to_cons(&w2, gamma).unwrap();
        let e2 = d2::eigensystem_prim(&w2, gamma, Axis::X);
        let fd2 = fd_jacobian(|v: &[f64; 4]| flux_2d_x(v, gamma), &u2);
        worst = worst.max(rel_diff(&rebuild(&e2.right, &e2.lambdas, &e2.left), &fd2));
        // y-direction flux is the x flux with the two momenta swapped
        let e2y = d2::eigensystem_prim(&w2, gamma, Axis::Y);
        let swap = |v: &[f64; 4]| [v[0], v[2], v[1], v[3]];
        let fd2y = fd_jacobian(|v: &[f64; 4]| swap(&flux_2d_x(&swap(v), gamma)), &u2);
        worst = worst.max(rel_diff(&rebuild(&e2y.right, &e2y.lambdas, &e2y.left), &fd2y));
    }
    Check { name: "R diag(lambda) L matches finite-difference Jacobian", worst, tol: 1e-6 }
}

pub fn riemann_residual(rng: &mut ChaCha8Rng, samples: usize) -> Check {
    let gamma = 1.4;
    let mut worst: f64 = 0.0;
    let mut tried = 0;
    while tried < samples {
        let (wl, wr) = (random_prim1(rng), random_prim1(rng));
        let Ok(star) = riemann::solve_star(&wl, &wr, gamma) else { continue };
        tried += 1;
        let scale = wl.sound_speed(gamma).max(wr.sound_speed(gamma));
        worst = worst.max(pressure_residual(star.p, &wl, &wr, gamma).abs() / scale);
        worst = worst.max(riemann::pressure_function(star.p, &wl, &wr, gamma).abs() / scale);
    }
    Check { name: "exact Riemann pressure-function residual", worst, tol: 1e-12 }
}

pub fn sod_vs_bisection() -> Check {
    let gamma = 1.4;
    let wl = Primitive1 { rho: 1.0, vel: [0.0], p: 1.0 };
    let wr = Primitive1 { rho: 0.125, vel: [0.0], p: 0.1 };
    let star = riemann::solve_star(&wl, &wr, gamma).unwrap();
    let (p, u) = star_by_bisection(&wl, &wr, gamma);
    let worst = ((star.p - p).abs() / p).max((star.u - u).abs() / u);
    Check { name: "Sod star state matches bisection", worst, tol: 1e-10 }
}

pub fn all(rng: &mut ChaCha8Rng) -> Vec<Check> {
    vec![
        big_stencil_exactness(rng, 2000),
        weight_normalisation(rng, 2000),
        smoothness_vs_quadrature(rng, 2000),
        tangential_derivative_exactness(rng, 2000),
        telescoping(rng, 200),
        eigensystem_inverse(rng, 500),
        jacobian_vs_differences(rng, 500),
        riemann_residual(rng, 500),
        sod_vs_bisection(),
    ]
}
