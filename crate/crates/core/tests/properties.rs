use proptest::prelude::*;

use grp_hweno::cases::{Case, GAMMA};
use grp_hweno::euler::{d1, d2, Primitive1, Primitive2};
use grp_hweno::recon::hweno::{self, HermiteWindow};
use grp_hweno::recon::{weno, ReconOptions, Scheme};
use grp_hweno::riemann;

fn window() -> impl Strategy<Value = HermiteWindow> {
    prop::array::uniform5(-10.0..10.0f64).prop_map(|d| HermiteWindow {
        left: d[0],
        centre: d[1],
        right: d[2],
        moment_left: d[3],
        moment_right: d[4],
    })
}

fn prim1() -> impl Strategy<Value = Primitive1> {
    (0.05..20.0f64, -10.0..10.0f64, 0.05..100.0f64).prop_map(|(rho, u, p)| Primitive1 { rho, vel: [u], p })
}

proptest! {
    #[test]
    fn hweno_trace_is_convex_combination_of_candidates(w in window()) {
        let q = hweno::candidates(&w);
        let lo = q.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = q.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let t = hweno::trace_left(&w, 1e-40);
        let slack = 1e-12 * (1.0 + hi.abs().max(lo.abs()));
        prop_assert!(t >= lo - slack && t <= hi + slack);
    }

    #[test]
    fn hweno_trace_commutes_with_scaling(w in window(), s in 1e-3..1e3f64) {
        let a = hweno::trace_left(&w.scaled(s), 1e-40);
        let b = s * hweno::trace_left(&w, 1e-40);
        prop_assert!((a - b).abs() <= 1e-10 * (1.0 + b.abs()));
    }

    #[test]
    fn hweno_right_trace_is_mirrored_left_trace(w in window()) {
        prop_assert_eq!(hweno::trace_right(&w, 1e-40), hweno::trace_left(&w.mirrored(), 1e-40));
    }

    #[test]
    fn hweno_reproduces_constants(c in -100.0..100.0f64) {
        let w = HermiteWindow { left: c, centre: c, right: c, moment_left: 0.0, moment_right: 0.0 };
        prop_assert!((hweno::trace_left(&w, 1e-40) - c).abs() <= 1e-13 * (1.0 + c.abs()));
    }

    #[test]
    fn weno_weights_stay_in_the_simplex(u in prop::array::uniform5(-10.0..10.0f64)) {
        let q = weno::candidates(&u);
        let lo = q.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = q.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let t = weno::trace_left(&u, 1e-40);
        let slack = 1e-12 * (1.0 + hi.abs().max(lo.abs()));
        prop_assert!(t >= lo - slack && t <= hi + slack);
    }

    #[test]
    fn weno_is_exact_on_linear_averages(a in -5.0..5.0f64, b in -5.0..5.0f64) {
        // cell averages of a + b x on unit cells centred at -2..2
        let u: [f64; 5] = std::array::from_fn(|k| a + b * (k as f64 - 2.0));
        prop_assert!((weno::trace_left(&u, 1e-40) - (a + 0.5 * b)).abs() <= 1e-12 * (1.0 + a.abs() + b.abs()));
    }

    #[test]
    fn primitive_conserved_round_trip(w in prim1(), v in -10.0..10.0f64) {
        let u = d1::prim_to_cons(&w, GAMMA).unwrap();
        let back = d1::cons_to_prim(&u, GAMMA).unwrap();
        prop_assert!((back.rho - w.rho).abs() <= 1e-12 * w.rho);
        prop_assert!((back.vel[0] - w.vel[0]).abs() <= 1e-12 * (1.0 + w.vel[0].abs()));
        prop_assert!((back.p - w.p).abs() <= 1e-10 * (w.p + w.rho * w.vel[0] * w.vel[0]));
        let w2 = Primitive2 { rho: w.rho, vel: [w.vel[0], v], p: w.p };
        let back2 = d2::cons_to_prim(&d2::prim_to_cons(&w2, GAMMA).unwrap(), GAMMA).unwrap();
        prop_assert!((back2.vel[1] - v).abs() <= 1e-12 * (1.0 + v.abs()));
    }

    #[test]
    fn riemann_pressure_and_velocity_continuous_across_contact(wl in prim1(), wr in prim1()) {
        if let Ok(star) = riemann::solve_star(&wl, &wr, GAMMA) {
            let left = riemann::sample(&wl, &wr, GAMMA, star.u - 1e-12).unwrap();
            let right = riemann::sample(&wl, &wr, GAMMA, star.u + 1e-12).unwrap();
            prop_assert!((left.p - right.p).abs() <= 1e-9 * star.p);
            prop_assert!((left.vel[0] - right.vel[0]).abs() <= 1e-9 * (1.0 + star.u.abs()));
            let far = 1e3 * (1.0 + wl.sound_speed(GAMMA) + wr.sound_speed(GAMMA) + wl.vel[0].abs() + wr.vel[0].abs());
            prop_assert_eq!(riemann::sample(&wl, &wr, GAMMA, -far).unwrap(), wl);
            prop_assert_eq!(riemann::sample(&wl, &wr, GAMMA, far).unwrap(), wr);
        }
    }

    #[test]
    fn riemann_mirror_symmetry(wl in prim1(), wr in prim1(), xi in -5.0..5.0f64) {
        if let Ok(a) = riemann::sample(&wl, &wr, GAMMA, xi) {
            let b = riemann::sample(&wr.mirrored(), &wl.mirrored(), GAMMA, -xi).unwrap();
            prop_assert!((a.rho - b.rho).abs() <= 1e-9 * a.rho);
            prop_assert!((a.vel[0] + b.vel[0]).abs() <= 1e-9 * (1.0 + a.vel[0].abs()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn smooth_runs_conserve_and_reconstruct_twice(cells in 16usize..48, steps in 1usize..6, hweno in any::<bool>()) {
        let scheme = if hweno { Scheme::Hweno5 } else { Scheme::Weno5 };
        let mut s = Case::Smooth.setup_1d(cells, GAMMA, None, ReconOptions::new(scheme)).unwrap();
        for _ in 0..steps {
            let k = s.stable_dt().unwrap();
            let report = s.step(k).unwrap();
            prop_assert_eq!(report.reconstructions, 2);
        }
        prop_assert!(s.conservation_drift() < 1e-13);
    }
}
