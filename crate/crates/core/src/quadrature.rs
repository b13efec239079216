//! Five-point Gauss–Legendre rules used to project initial and exact data
//! onto cell averages.

const S: f64 = 0.538_469_310_105_683_1;
const T: f64 = 0.906_179_845_938_664;

/// Nodes on [-1/2, 1/2].
pub const NODES: [f64; 5] = [-0.5 * T, -0.5 * S, 0.0, 0.5 * S, 0.5 * T];
/// Weights summing to one.
pub const WEIGHTS: [f64; 5] = [
    0.118_463_442_528_094_5,
    0.239_314_335_249_683_2,
    0.284_444_444_444_444_4,
    0.239_314_335_249_683_2,
    0.118_463_442_528_094_5,
];

/// Two-point nodes on [-1/2, 1/2] used for edge fluxes and moments.
pub const EDGE_NODES: [f64; 2] = [-0.288_675_134_594_812_9, 0.288_675_134_594_812_9];

/// Average of `f` over `[centre - h/2, centre + h/2]`.
pub fn average<const N: usize>(centre: f64, h: f64, mut f: impl FnMut(f64) -> [f64; N]) -> [f64; N] {
    let mut acc = [0.0; N];
    for (xi, w) in NODES.iter().zip(WEIGHTS) {
        let v = f(centre + xi * h);
        for c in 0..N {
            acc[c] += w * v[c];
        }
    }
    acc
}

/// Tensor-product average over a rectangle.
pub fn average_2d<const N: usize>(centre: [f64; 2], h: [f64; 2], mut f: impl FnMut(f64, f64) -> [f64; N]) -> [f64; N] {
    let mut acc = [0.0; N];
    for (yi, wy) in NODES.iter().zip(WEIGHTS) {
        for (xi, wx) in NODES.iter().zip(WEIGHTS) {
            let v = f(centre[0] + xi * h[0], centre[1] + yi * h[1]);
            for c in 0..N {
                acc[c] += wx * wy * v[c];
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn rules_are_exact_for_their_degree() {
        assert_relative_eq!(WEIGHTS.iter().sum::<f64>(), 1.0, epsilon = 1e-15);
        // degree 9 exact on [0, 1]: average of x^9 = 1/10
        let a = average(0.5, 1.0, |x| [x.powi(9)]);
        assert_relative_eq!(a[0], 0.1, epsilon = 1e-14);
        let b = average_2d([0.5, 1.0], [1.0, 2.0], |x, y| [x.powi(4) * y.powi(3)]);
        // (1/5) * (1/2) * ∫_0^2 y^3 dy = (1/5) * 2
        assert_relative_eq!(b[0], 0.4, epsilon = 1e-14);
        let e = EDGE_NODES.iter().map(|x| 0.5 * x * x).sum::<f64>();
        assert_relative_eq!(e, 1.0 / 12.0, epsilon = 1e-15);
    }
}
