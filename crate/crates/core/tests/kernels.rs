mod common;

use common::kernels;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn assert_check(c: kernels::Check) {
    assert!(c.ok(), "{}: worst {:e} > {:e}", c.name, c.worst, c.tol);
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn big_stencil_is_exact_for_quartics() {
    assert_check(kernels::big_stencil_exactness(&mut rng(1), 5000));
}

#[test]
fn weights_are_normalised() {
    assert_check(kernels::weight_normalisation(&mut rng(2), 5000));
}

#[test]
fn smoothness_indicators_agree_with_quadrature() {
    assert_check(kernels::smoothness_vs_quadrature(&mut rng(3), 5000));
}

#[test]
fn gauss_point_derivative_is_exact_for_quartics() {
    assert_check(kernels::tangential_derivative_exactness(&mut rng(4), 5000));
}

#[test]
fn moments_telescope() {
    assert_check(kernels::telescoping(&mut rng(5), 500));
}

#[test]
fn eigenvectors_are_inverse() {
    assert_check(kernels::eigensystem_inverse(&mut rng(6), 2000));
}

#[test]
fn eigen_decomposition_rebuilds_jacobian() {
    assert_check(kernels::jacobian_vs_differences(&mut rng(7), 1000));
}

#[test]
fn riemann_star_pressure_is_a_root() {
    assert_check(kernels::riemann_residual(&mut rng(8), 2000));
}

#[test]
fn sod_star_state() {
    assert_check(kernels::sod_vs_bisection());
}
