//! Fixed-size vector and matrix helpers for the 3- and 4-component Euler systems.

pub type Mat<const N: usize> = [[f64; N]; N];

#[inline(always)]
pub fn matvec<const N: usize>(m: &Mat<N>, v: &[f64; N]) -> [f64; N] {
    let mut out = [0.0; N];
    for r in 0..N {
        let mut s = 0.0;
        for c in 0..N {
            s += m[r][c] * v[c];
        }
        out[r] = s;
    }
    out
}

pub fn matmul<const N: usize>(a: &Mat<N>, b: &Mat<N>) -> Mat<N> {
    let mut out = [[0.0; N]; N];
    for r in 0..N {
        for c in 0..N {
            let mut s = 0.0;
            for k in 0..N {
                s += a[r][k] * b[k][c];
            }
            out[r][c] = s;
        }
    }
    out
}

#[inline(always)]
pub fn add<const N: usize>(a: &[f64; N], b: &[f64; N]) -> [f64; N] {
    std::array::from_fn(|k| a[k] + b[k])
}

#[inline(always)]
pub fn sub<const N: usize>(a: &[f64; N], b: &[f64; N]) -> [f64; N] {
    std::array::from_fn(|k| a[k] - b[k])
}

#[inline(always)]
pub fn scale<const N: usize>(s: f64, a: &[f64; N]) -> [f64; N] {
    std::array::from_fn(|k| s * a[k])
}

/// `a + s * b`
#[inline(always)]
pub fn axpy<const N: usize>(a: &[f64; N], s: f64, b: &[f64; N]) -> [f64; N] {
    std::array::from_fn(|k| a[k] + s * b[k])
}

#[inline(always)]
pub fn midpoint<const N: usize>(a: &[f64; N], b: &[f64; N]) -> [f64; N] {
    std::array::from_fn(|k| 0.5 * (a[k] + b[k]))
}

pub fn identity<const N: usize>() -> Mat<N> {
    let mut m = [[0.0; N]; N];
    for (k, row) in m.iter_mut().enumerate() {
        row[k] = 1.0;
    }
    m
}

pub fn max_abs_diff<const N: usize>(a: &Mat<N>, b: &Mat<N>) -> f64 {
    let mut d: f64 = 0.0;
    for r in 0..N {
        for c in 0..N {
            d = d.max((a[r][c] - b[r][c]).abs());
        }
    }
    d
}

pub fn max_abs<const N: usize>(a: &Mat<N>) -> f64 {
    a.iter().flatten().fold(0.0_f64, |m, v| m.max(v.abs()))
}
