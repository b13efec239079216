use crate::error::{Location, Result, SolverError, Stage};
use crate::euler::d1;
use crate::gradient::{check_state, interface_value_final, interface_value_intermediate};
use crate::grp::{grp_flux_1d, GrpFlux};
use crate::recon::{reconstruct_interface, CellField1d, ReconOptions, GHOST};

use super::bc::{apply_1d, validate_1d, Boundary1d};
use super::{clip_dt, compute_dt, relative_drift, RunSummary, StepReport};

/// One-dimensional two-stage GRP solver state.
#[derive(Debug, Clone)]
pub struct Solver1d {
    pub field: CellField1d,
    pub gamma: f64,
    pub cfl: f64,
    pub opts: ReconOptions,
    pub bc: [Boundary1d; 2],
    pub t: f64,
    pub steps: usize,
    /// Reconstruction passes since construction.
    pub reconstructions: usize,
    initial_total: [f64; 3],
    /// Time-integrated net flux leaving through the two boundaries.
    outflow: [f64; 3],
    half: CellField1d,
    grp_n: Vec<GrpFlux<3>>,
    grp_half: Vec<GrpFlux<3>>,
}

impl Solver1d {
    /// `field` must hold physical averages and interface values at `t`.
    pub fn new(field: CellField1d, gamma: f64, cfl: f64, opts: ReconOptions, bc: [Boundary1d; 2], t: f64) -> Result<Self> {
        crate::euler::check_gamma(gamma)?;
        validate_1d(&bc, gamma)?;
        if !(cfl > 0.0 && cfl.is_finite()) {
            return Err(SolverError::Config(format!("CFL number must be positive, got {cfl}")));
        }
        for (j, u) in field.interior().iter().enumerate() {
            check_state(u, gamma, Location::Cell(j), Stage::Initial)?;
        }
        for (i, u) in field.interior_interfaces().iter().enumerate() {
            check_state(u, gamma, Location::Interface(i), Stage::Initial)?;
        }
        let n = field.cells;
        Ok(Solver1d {
            initial_total: field.total(),
            half: field.clone(),
            field,
            gamma,
            cfl,
            opts,
            bc,
            t,
            steps: 0,
            reconstructions: 0,
            outflow: [0.0; 3],
            grp_n: vec![GrpFlux::default(); n + 1],
            grp_half: vec![GrpFlux::default(); n + 1],
        })
    }

    pub fn stable_dt(&self) -> Result<f64> {
        let s = d1::max_wave_speed(self.field.interior(), self.gamma)?;
        compute_dt(self.cfl, self.field.h, s)
    }

    /// Reconstruct `f` at every physical interface and solve the GRPs.
    fn reconstruct_and_solve(
        f: &mut CellField1d,
        bc: &[Boundary1d; 2],
        gamma: f64,
        opts: &ReconOptions,
        stage: Stage,
        out: &mut [GrpFlux<3>],
    ) -> Result<()> {
        apply_1d(f, bc, gamma);
        f.update_moments();
        for (i, slot) in out.iter_mut().enumerate() {
            let loc = Location::Interface(i);
            let trace = reconstruct_interface(f, i + GHOST, gamma, opts).map_err(|e| e.at(loc, stage))?;
            *slot = grp_flux_1d(&trace, gamma).map_err(|e| e.at(loc, stage))?;
        }
        Ok(())
    }

    /// Reconstruction at `t^n` and the update to `t^n + k/2`.
    pub fn stage1(&mut self, k: f64) -> Result<()> {
        Self::reconstruct_and_solve(&mut self.field, &self.bc, self.gamma, &self.opts, Stage::ReconstructFull, &mut self.grp_n)?;
        self.reconstructions += 1;
        let c = 0.5 * k / self.field.h;
        let n = self.field.cells;
        let fstar = |g: &GrpFlux<3>| -> [f64; 3] { std::array::from_fn(|q| g.flux[q] + 0.25 * k * g.dfdt[q]) };
        for j in 0..n {
            let fl = fstar(&self.grp_n[j]);
            let fr = fstar(&self.grp_n[j + 1]);
            let u = &self.field.averages[j + GHOST];
            let v: [f64; 3] = std::array::from_fn(|q| u[q] - c * (fr[q] - fl[q]));
            check_state(&v, self.gamma, Location::Cell(j), Stage::Intermediate)?;
            self.half.averages[j + GHOST] = v;
        }
        for i in 0..=n {
            let v = interface_value_intermediate(&self.grp_n[i].point, k);
            check_state(&v, self.gamma, Location::Interface(i), Stage::Intermediate)?;
            self.half.interface_values[i + GHOST] = v;
        }
        Ok(())
    }

    /// Reconstruction at `t^n + k/2` and the update to `t^{n+1}`.
    pub fn stage2(&mut self, k: f64) -> Result<()> {
        Self::reconstruct_and_solve(&mut self.half, &self.bc, self.gamma, &self.opts, Stage::ReconstructHalf, &mut self.grp_half)?;
        self.reconstructions += 1;
        let n = self.field.cells;
        let c = k / self.field.h;
        let f4 = |a: &GrpFlux<3>, b: &GrpFlux<3>| -> [f64; 3] {
            std::array::from_fn(|q| a.flux[q] + 0.5 * k * (a.dfdt[q] / 3.0 + 2.0 * b.dfdt[q] / 3.0))
        };
        let mut left = f4(&self.grp_n[0], &self.grp_half[0]);
        let first = left;
        let mut next = vec![[0.0; 3]; n];
        for j in 0..n {
            let right = f4(&self.grp_n[j + 1], &self.grp_half[j + 1]);
            let u = &self.field.averages[j + GHOST];
            let v: [f64; 3] = std::array::from_fn(|q| u[q] - c * (right[q] - left[q]));
            check_state(&v, self.gamma, Location::Cell(j), Stage::Final)?;
            next[j] = v;
            left = right;
        }
        let mut iv = vec![[0.0; 3]; n + 1];
        for (i, slot) in iv.iter_mut().enumerate() {
            let v = interface_value_final(&self.grp_n[i].point, &self.grp_half[i].point, k);
            check_state(&v, self.gamma, Location::Interface(i), Stage::Final)?;
            *slot = v;
        }
        self.field.interior_mut().copy_from_slice(&next);
        self.field.interface_values[GHOST..=GHOST + n].copy_from_slice(&iv);
        for q in 0..3 {
            self.outflow[q] += k * (left[q] - first[q]);
        }
        Ok(())
    }

    /// One full step of size `k`. On error the solution is left at `t^n`.
    pub fn step(&mut self, k: f64) -> Result<StepReport> {
        let before = self.reconstructions;
        self.stage1(k)?;
        self.stage2(k)?;
        self.t += k;
        self.steps += 1;
        Ok(StepReport { dt: k, reconstructions: self.reconstructions - before })
    }

    /// Advance to `t_end` with CFL-limited steps; `on_step` sees every report.
    pub fn run_until(&mut self, t_end: f64, mut on_step: impl FnMut(&StepReport)) -> Result<RunSummary> {
        let mut max_r = 0;
        let mut min_r = usize::MAX;
        let start_steps = self.steps;
        while self.t < t_end {
            let k = clip_dt(self.t, self.stable_dt()?, t_end);
            let report = self.step(k)?;
            if self.t >= t_end - 1e-14 * t_end.abs().max(1.0) {
                self.t = t_end;
            }
            max_r = max_r.max(report.reconstructions);
            min_r = min_r.min(report.reconstructions);
            on_step(&report);
        }
        Ok(RunSummary {
            steps: self.steps - start_steps,
            t: self.t,
            conservation_drift: self.conservation_drift(),
            max_reconstructions_per_step: max_r,
            min_reconstructions_per_step: if min_r == usize::MAX { 0 } else { min_r },
        })
    }

    /// Relative mismatch between the current totals and the initial totals
    /// corrected by boundary fluxes.
    pub fn conservation_drift(&self) -> f64 {
        relative_drift(&self.initial_total, &self.field.total(), &self.outflow)
    }

    pub fn densities(&self) -> Vec<f64> {
        self.field.interior().iter().map(|u| u[0]).collect()
    }

    pub fn centres(&self) -> Vec<f64> {
        (0..self.field.cells).map(|j| self.field.centre(j)).collect()
    }
}
