//! Classical fifth-order WENO on five cell averages `ū_{j-2..j+2}`, with
//! WENO-Z weights. Used by the baseline scheme.

use super::hweno::{nonlinear_weights_z, LinearWeights};

pub const LINEAR_WEIGHTS: [f64; 3] = [0.1, 0.6, 0.3];

/// Candidate values at `x_{j+1/2}` from stencils `{j-2,j-1,j}`, `{j-1,j,j+1}`, `{j,j+1,j+2}`.
#[inline(always)]
pub fn candidates(u: &[f64; 5]) -> [f64; 3] {
    [
        (2.0 * u[0] - 7.0 * u[1] + 11.0 * u[2]) / 6.0,
        (-u[1] + 5.0 * u[2] + 2.0 * u[3]) / 6.0,
        (2.0 * u[2] + 5.0 * u[3] - u[4]) / 6.0,
    ]
}

/// Jiang–Shu indicators.
#[inline(always)]
pub fn smoothness_indicators(u: &[f64; 5]) -> [f64; 3] {
    let c = 13.0 / 12.0;
    let s = |a: f64| a * a;
    [
        c * s(u[0] - 2.0 * u[1] + u[2]) + 0.25 * s(u[0] - 4.0 * u[1] + 3.0 * u[2]),
        c * s(u[1] - 2.0 * u[2] + u[3]) + 0.25 * s(u[1] - u[3]),
        c * s(u[2] - 2.0 * u[3] + u[4]) + 0.25 * s(3.0 * u[2] - 4.0 * u[3] + u[4]),
    ]
}

/// Left limit `u_{j+1/2,-}` from `ū_{j-2..j+2}`.
#[inline(always)]
pub fn trace_left(u: &[f64; 5], eps: f64) -> f64 {
    let q = candidates(u);
    let w = nonlinear_weights_z(smoothness_indicators(u), LINEAR_WEIGHTS, eps);
    w[0] * q[0] + w[1] * q[1] + w[2] * q[2]
}

/// Right limit `u_{j-1/2,+}` from the same window, by reversal.
#[inline(always)]
pub fn trace_right(u: &[f64; 5], eps: f64) -> f64 {
    trace_left(&[u[4], u[3], u[2], u[1], u[0]], eps)
}

pub fn linear_trace(u: &[f64; 5]) -> f64 {
    let q = candidates(u);
    (0..3).map(|r| LINEAR_WEIGHTS[r] * q[r]).sum()
}

/// Coefficients `c` with `Σ_k c_k ū_{j+o_k} = p(x_j + xi h)` for the polynomial
/// of degree `N-1` matching the averages of cells at offsets `o`.
pub fn point_coefficients<const N: usize>(offsets: [i32; N], xi: f64) -> [f64; N] {
    // M[k][p] = average of s^p over [o_k - 1/2, o_k + 1/2]; solve M^T c = (xi^p)_p
    let mut a = [[0.0; N]; N];
    for (k, &o) in offsets.iter().enumerate() {
        let lo = o as f64 - 0.5;
        let hi = o as f64 + 0.5;
        for p in 0..N {
            let e = (p + 1) as i32;
            a[p][k] = (hi.powi(e) - lo.powi(e)) / e as f64;
        }
    }
    let mut b: [f64; N] = std::array::from_fn(|p| xi.powi(p as i32));
    // Gaussian elimination with partial pivoting
    for col in 0..N {
        let piv = (col..N).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs())).unwrap();
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..N {
            let f = a[row][col] / a[col][col];
            for c in col..N {
                a[row][c] -= f * a[col][c];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = [0.0; N];
    for row in (0..N).rev() {
        let mut s = b[row];
        for c in row + 1..N {
            s -= a[row][c] * x[c];
        }
        x[row] = s / a[row][row];
    }
    x
}

/// WENO5 evaluation at `x_j + xi h` for arbitrary `xi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WenoPointRule {
    pub xi: f64,
    pub candidates: [[f64; 3]; 3],
    pub big: [f64; 5],
    pub weights: LinearWeights,
}

impl WenoPointRule {
    pub fn at(xi: f64) -> Self {
        let candidates = [
            point_coefficients([-2, -1, 0], xi),
            point_coefficients([-1, 0, 1], xi),
            point_coefficients([0, 1, 2], xi),
        ];
        let big = point_coefficients([-2, -1, 0, 1, 2], xi);
        let g0 = big[0] / candidates[0][0];
        let g2 = big[4] / candidates[2][2];
        WenoPointRule { xi, candidates, big, weights: LinearWeights::from_raw([g0, 1.0 - g0 - g2, g2]) }
    }

    #[inline(always)]
    pub fn candidate_values(&self, u: &[f64; 5]) -> [f64; 3] {
        std::array::from_fn(|r| {
            let c = &self.candidates[r];
            c[0] * u[r] + c[1] * u[r + 1] + c[2] * u[r + 2]
        })
    }

    pub fn big_value(&self, u: &[f64; 5]) -> f64 {
        (0..5).map(|k| self.big[k] * u[k]).sum()
    }

    #[inline(always)]
    pub fn evaluate(&self, u: &[f64; 5], eps: f64) -> f64 {
        let q = self.candidate_values(u);
        self.weights.combine(&q, smoothness_indicators(u), eps)
    }
}
