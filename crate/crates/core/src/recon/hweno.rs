//! Fifth-order Hermite WENO kernels on the three-cell stencil
//! `I_{j-1} ∪ I_j ∪ I_{j+1}`.
//!
//! Inputs are the averages of the three cells and the first moments of the
//! two outer cells. Moments are carried pre-multiplied by the mesh size
//! (`h * Δu`), which keeps every kernel free of `h`.

/// Linear weights of the stencils `S^(-1)`, `S^(0)`, `S^(1)` at `x_{j+1/2}`.
pub const LINEAR_WEIGHTS: [f64; 3] = [9.0 / 80.0, 29.0 / 80.0, 21.0 / 40.0];

/// Scalar data on the Hermite stencil centred on cell `j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermiteWindow {
    pub left: f64,
    pub centre: f64,
    pub right: f64,
    /// `h * Δu_{j-1}`
    pub moment_left: f64,
    /// `h * Δu_{j+1}`
    pub moment_right: f64,
}

impl HermiteWindow {
    pub fn new(ubar: [f64; 3], moments: [f64; 2], h: f64) -> Self {
        HermiteWindow {
            left: ubar[0],
            centre: ubar[1],
            right: ubar[2],
            moment_left: h * moments[0],
            moment_right: h * moments[1],
        }
    }

    /// Reflection about the centre of cell `j`: the outer cells swap and the
    /// moments (derivative averages) change sign.
    #[inline(always)]
    pub fn mirrored(&self) -> Self {
        HermiteWindow {
            left: self.right,
            centre: self.centre,
            right: self.left,
            moment_left: -self.moment_right,
            moment_right: -self.moment_left,
        }
    }

    pub fn scaled(&self, s: f64) -> Self {
        HermiteWindow {
            left: s * self.left,
            centre: s * self.centre,
            right: s * self.right,
            moment_left: s * self.moment_left,
            moment_right: s * self.moment_right,
        }
    }

    #[inline(always)]
    fn as_array(&self) -> [f64; 5] {
        [self.left, self.centre, self.right, self.moment_left, self.moment_right]
    }
}

/// Candidate values `(u^(-1), u^(0), u^(1))` at `x_{j+1/2}`.
#[inline(always)]
pub fn candidates(w: &HermiteWindow) -> [f64; 3] {
    [
        (-7.0 * w.left + 13.0 * w.centre) / 6.0 - 2.0 / 3.0 * w.moment_left,
        (-w.left + 5.0 * w.centre + 2.0 * w.right) / 6.0,
        (w.centre + 5.0 * w.right) / 6.0 - w.moment_right / 3.0,
    ]
}

/// Value of the quartic interpolating all five data at `x_{j+1/2}`.
#[inline]
pub fn big_stencil(w: &HermiteWindow) -> f64 {
    (-23.0 * w.left + 76.0 * w.centre + 67.0 * w.right - 9.0 * w.moment_left - 21.0 * w.moment_right) / 120.0
}

#[inline(always)]
pub fn smoothness_indicators(w: &HermiteWindow) -> [f64; 3] {
    let a = -2.0 * w.left + 2.0 * w.centre - w.moment_left;
    let b = -w.left + w.centre - w.moment_left;
    let c = -w.left + w.right;
    let d = -w.left + 2.0 * w.centre - w.right;
    let e = 2.0 * w.right - 2.0 * w.centre - w.moment_right;
    let f = w.right - w.centre - w.moment_right;
    [
        a * a + 13.0 / 3.0 * b * b,
        0.25 * c * c + 13.0 / 12.0 * d * d,
        e * e + 13.0 / 3.0 * f * f,
    ]
}

/// WENO-Z nonlinear weights with global indicator `|β_last - β_first|`.
#[inline(always)]
pub fn nonlinear_weights_z(betas: [f64; 3], gammas: [f64; 3], eps: f64) -> [f64; 3] {
    let tau = (betas[2] - betas[0]).abs();
    let alpha: [f64; 3] = std::array::from_fn(|r| gammas[r] * (1.0 + tau / (betas[r] + eps)));
    let sum = alpha[0] + alpha[1] + alpha[2];
    alpha.map(|a| a / sum)
}

/// Left limit `u_{j+1/2,-}`.
#[inline(always)]
pub fn trace_left(w: &HermiteWindow, eps: f64) -> f64 {
    let q = candidates(w);
    let omega = nonlinear_weights_z(smoothness_indicators(w), LINEAR_WEIGHTS, eps);
    omega[0] * q[0] + omega[1] * q[1] + omega[2] * q[2]
}

/// Right limit `u_{j-1/2,+}`, by mirroring about `x_j`.
#[inline(always)]
pub fn trace_right(w: &HermiteWindow, eps: f64) -> f64 {
    trace_left(&w.mirrored(), eps)
}

/// One-sided derivatives from the Hermite quartic,
/// `((du/dx)_{j-1/2,+}, (du/dx)_{j+1/2,-})`.
///
/// This stencil degrades the two-stage scheme to third order because the
/// intermediate moments carry O(k^3) errors; it exists for comparison only.
#[inline]
pub fn interface_derivative_hermite(w: &HermiteWindow, h: f64) -> (f64, f64) {
    let plus = (-13.0 * w.left + 16.0 * w.centre - 3.0 * w.right - 3.0 * w.moment_left + w.moment_right) / (8.0 * h);
    let minus = (3.0 * w.left - 16.0 * w.centre + 13.0 * w.right + w.moment_left - 3.0 * w.moment_right) / (8.0 * h);
    (plus, minus)
}

/// Linear weights of a point rule, split into positive and negative parts
/// when some weight is negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LinearWeights {
    Positive([f64; 3]),
    Split {
        plus: [f64; 3],
        minus: [f64; 3],
        sigma_plus: f64,
        sigma_minus: f64,
    },
}

impl LinearWeights {
    /// Positive/negative decomposition with θ = 3 when needed.
    pub fn from_raw(gammas: [f64; 3]) -> Self {
        if gammas.iter().all(|g| *g > 0.0) {
            return LinearWeights::Positive(gammas);
        }
        const THETA: f64 = 3.0;
        let plus_raw = gammas.map(|g| 0.5 * (g + THETA * g.abs()));
        let minus_raw: [f64; 3] = std::array::from_fn(|r| plus_raw[r] - gammas[r]);
        let sigma_plus: f64 = plus_raw.iter().sum();
        let sigma_minus: f64 = minus_raw.iter().sum();
        LinearWeights::Split {
            plus: plus_raw.map(|g| g / sigma_plus),
            minus: minus_raw.map(|g| g / sigma_minus),
            sigma_plus,
            sigma_minus,
        }
    }

    /// Effective linear weights `γ = σ⁺γ⁺ − σ⁻γ⁻`.
    pub fn effective(&self) -> [f64; 3] {
        match *self {
            LinearWeights::Positive(g) => g,
            LinearWeights::Split { plus, minus, sigma_plus, sigma_minus } => {
                std::array::from_fn(|r| sigma_plus * plus[r] - sigma_minus * minus[r])
            }
        }
    }

    #[inline(always)]
    pub fn combine(&self, q: &[f64; 3], betas: [f64; 3], eps: f64) -> f64 {
        match *self {
            LinearWeights::Positive(g) => {
                let w = nonlinear_weights_z(betas, g, eps);
                w[0] * q[0] + w[1] * q[1] + w[2] * q[2]
            }
            LinearWeights::Split { plus, minus, sigma_plus, sigma_minus } => {
                let wp = nonlinear_weights_z(betas, plus, eps);
                let wm = nonlinear_weights_z(betas, minus, eps);
                let p = wp[0] * q[0] + wp[1] * q[1] + wp[2] * q[2];
                let m = wm[0] * q[0] + wm[1] * q[1] + wm[2] * q[2];
                sigma_plus * p - sigma_minus * m
            }
        }
    }
}

/// HWENO evaluation at an arbitrary point `x_j + xi * h` inside or on the
/// boundary of cell `j`.
///
/// Candidate and big-stencil coefficients are the closed-form values of the
/// interpolating polynomials at `xi`; the linear weights follow from
/// matching the moment coefficients of the big stencil, which only
/// `S^(-1)` (for `Δu_{j-1}`) and `S^(1)` (for `Δu_{j+1}`) carry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitePointRule {
    pub xi: f64,
    /// Coefficients of `(ū_{j-1}, ū_j, ū_{j+1}, hΔu_{j-1}, hΔu_{j+1})` per candidate.
    pub candidates: [[f64; 5]; 3],
    pub big: [f64; 5],
    pub weights: LinearWeights,
}

impl HermitePointRule {
    pub fn at(xi: f64) -> Self {
        let x2 = xi * xi;
        let x3 = x2 * xi;
        let x4 = x2 * x2;
        let cm = [
            -(12.0 * x2 + 24.0 * xi - 1.0) / 12.0,
            (12.0 * x2 + 24.0 * xi + 11.0) / 12.0,
            0.0,
            -(12.0 * x2 + 12.0 * xi - 1.0) / 12.0,
            0.0,
        ];
        let c0 = [
            (12.0 * x2 - 12.0 * xi - 1.0) / 24.0,
            -(12.0 * x2 - 13.0) / 12.0,
            (12.0 * x2 + 12.0 * xi - 1.0) / 24.0,
            0.0,
            0.0,
        ];
        let cp = [
            0.0,
            (12.0 * x2 - 24.0 * xi + 11.0) / 12.0,
            -(12.0 * x2 - 24.0 * xi - 1.0) / 12.0,
            0.0,
            (12.0 * x2 - 12.0 * xi - 1.0) / 12.0,
        ];
        let big = [
            -(240.0 * x4 - 120.0 * x3 - 600.0 * x2 + 390.0 * xi + 47.0) / 480.0,
            (240.0 * x4 - 600.0 * x2 + 287.0) / 240.0,
            -(240.0 * x4 + 120.0 * x3 - 600.0 * x2 - 390.0 * xi + 47.0) / 480.0,
            -(80.0 * x4 - 80.0 * x3 - 120.0 * x2 + 100.0 * xi + 9.0) / 320.0,
            (80.0 * x4 + 80.0 * x3 - 120.0 * x2 - 100.0 * xi + 9.0) / 320.0,
        ];
        let g_left = big[3] / cm[3];
        let g_right = big[4] / cp[4];
        let gammas = [g_left, 1.0 - g_left - g_right, g_right];
        HermitePointRule {
            xi,
            candidates: [cm, c0, cp],
            big,
            weights: LinearWeights::from_raw(gammas),
        }
    }

    #[inline(always)]
    pub fn candidate_values(&self, w: &HermiteWindow) -> [f64; 3] {
        let d = w.as_array();
        std::array::from_fn(|r| {
            let c = &self.candidates[r];
            c[0] * d[0] + c[1] * d[1] + c[2] * d[2] + c[3] * d[3] + c[4] * d[4]
        })
    }

    pub fn big_value(&self, w: &HermiteWindow) -> f64 {
        let d = w.as_array();
        (0..5).map(|k| self.big[k] * d[k]).sum()
    }

    /// Linear-weight combination (equals the big stencil for any data).
    pub fn linear_value(&self, w: &HermiteWindow) -> f64 {
        let q = self.candidate_values(w);
        let g = self.weights.effective();
        g[0] * q[0] + g[1] * q[1] + g[2] * q[2]
    }

    #[inline(always)]
    pub fn evaluate(&self, w: &HermiteWindow, eps: f64) -> f64 {
        let q = self.candidate_values(w);
        self.weights.combine(&q, smoothness_indicators(w), eps)
    }
}
