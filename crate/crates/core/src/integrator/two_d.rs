use rayon::prelude::*;

use crate::error::{Location, Result, SolverError, Stage};
use crate::euler::{d2, Axis};
use crate::gradient::{check_state, interface_value_final, interface_value_intermediate};
use crate::grp::GrpFlux;
use crate::recon::{ReconOptions, GHOST};
use crate::recon2d::{edge_grp, CellField2d, Rules};

use super::bc::{apply_2d, validate_2d, Boundary2d};
use super::{clip_dt, compute_dt_2d, relative_drift, RunSummary, StepReport};

/// Two-dimensional two-stage GRP solver state. Boundaries are ordered
/// `[left, right, bottom, top]`.
#[derive(Debug, Clone)]
pub struct Solver2d {
    pub field: CellField2d,
    pub gamma: f64,
    pub cfl: f64,
    pub opts: ReconOptions,
    pub bc: [Boundary2d; 4],
    pub t: f64,
    pub steps: usize,
    pub reconstructions: usize,
    /// Use the rayon pool for row-parallel loops.
    pub parallel: bool,
    rules: Rules,
    initial_total: [f64; 4],
    outflow: [f64; 4],
    half: CellField2d,
    grp_n: [Vec<[GrpFlux<4>; 2]>; 2],
    grp_half: [Vec<[GrpFlux<4>; 2]>; 2],
}

impl Solver2d {
    pub fn new(field: CellField2d, gamma: f64, cfl: f64, opts: ReconOptions, bc: [Boundary2d; 4], t: f64) -> Result<Self> {
        crate::euler::check_gamma(gamma)?;
        validate_2d(&bc, gamma)?;
        if !(cfl > 0.0 && cfl.is_finite()) {
            return Err(SolverError::Config(format!("CFL number must be positive, got {cfl}")));
        }
        for (i, j) in field.interior_indices() {
            check_state(&field.averages[field.idx(i, j)], gamma, Location::Cell2d(i - GHOST, j - GHOST), Stage::Initial)?;
        }
        Ok(Solver2d {
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
            parallel: true,
            rules: Rules::default(),
            outflow: [0.0; 4],
            grp_n: [Vec::new(), Vec::new()],
            grp_half: [Vec::new(), Vec::new()],
        })
    }

    pub fn stable_dt(&self) -> Result<f64> {
        let f = &self.field;
        let s = d2::max_wave_speed(f.interior_indices().map(|(i, j)| &f.averages[f.idx(i, j)]), self.gamma)?;
        compute_dt_2d(self.cfl, f.hx, f.hy, s)
    }

    #[allow(clippy::too_many_arguments)]
    fn reconstruct_and_solve(
        f: &mut CellField2d,
        bc: &[Boundary2d; 4],
        t: f64,
        gamma: f64,
        opts: &ReconOptions,
        rules: &Rules,
        stage: Stage,
        parallel: bool,
        out: &mut [Vec<[GrpFlux<4>; 2]>; 2],
    ) -> Result<()> {
        apply_2d(f, bc, t, gamma);
        f.update_moments();
        for a in [Axis::X, Axis::Y] {
            edge_grp(f, a, gamma, opts, rules, stage, parallel, &mut out[a.index()])?;
        }
        Ok(())
    }

    /// Flux through edge `(a, n, t)` (physical indices), Gauss-averaged.
    #[inline(always)]
    fn edge_flux(
        grp: &[Vec<[GrpFlux<4>; 2]>; 2],
        f: &CellField2d,
        a: Axis,
        n: usize,
        t: usize,
        flux: impl Fn(&GrpFlux<4>) -> [f64; 4],
    ) -> [f64; 4] {
        let row = f.cells_along(a) + 1;
        let pair = &grp[a.index()][t * row + n];
        let g0 = flux(&pair[0]);
        let g1 = flux(&pair[1]);
        std::array::from_fn(|q| 0.5 * (g0[q] + g1[q]))
    }

    /// `u - c (r_x + r_y)` for every physical cell; the sum is commutative
    /// so transposed data gives transposed results bit for bit.
    fn update_cells(
        &self,
        grp: &[Vec<[GrpFlux<4>; 2]>; 2],
        scale: f64,
        stage: Stage,
        flux: impl Fn(&GrpFlux<4>) -> [f64; 4] + Sync,
    ) -> Result<Vec<[f64; 4]>> {
        let f = &self.field;
        let (nx, ny) = (f.nx, f.ny);
        let (hx, hy) = (f.hx, f.hy);
        let row = |j: usize| -> Result<Vec<[f64; 4]>> {
            (0..nx)
                .map(|i| {
                    let fw = Self::edge_flux(grp, f, Axis::X, i, j, &flux);
                    let fe = Self::edge_flux(grp, f, Axis::X, i + 1, j, &flux);
                    let fs = Self::edge_flux(grp, f, Axis::Y, j, i, &flux);
                    let fn_ = Self::edge_flux(grp, f, Axis::Y, j + 1, i, &flux);
                    let u = &f.averages[f.idx(i + GHOST, j + GHOST)];
                    let v: [f64; 4] = std::array::from_fn(|q| {
                        let rx = (fe[q] - fw[q]) / hx;
                        let ry = (fn_[q] - fs[q]) / hy;
                        u[q] - scale * (rx + ry)
                    });
                    check_state(&v, self.gamma, Location::Cell2d(i, j), stage)?;
                    Ok(v)
                })
                .collect()
        };
        let rows: Vec<Result<Vec<[f64; 4]>>> =
            if self.parallel { (0..ny).into_par_iter().map(row).collect() } else { (0..ny).map(row).collect() };
        let mut out = Vec::with_capacity(nx * ny);
        for r in rows {
            out.extend(r?);
        }
        Ok(out)
    }

    /// Physical edge values from per-edge GRP data, checked before writing.
    fn write_edges(
        layout: &CellField2d,
        edges: &mut [Vec<[f64; 4]>; 2],
        value: impl Fn(usize, usize, usize) -> [f64; 4],
        gamma: f64,
        stage: Stage,
    ) -> Result<()> {
        for a in [Axis::X, Axis::Y] {
            let nn = layout.cells_along(a);
            let nt = layout.cells_along(a.other());
            for t in 0..nt {
                for n in 0..=nn {
                    for m in 0..2 {
                        let v = value(a.index(), t * (nn + 1) + n, m);
                        check_state(&v, gamma, Location::Edge2d(a.index() as u8, n, t, m as u8), stage)?;
                        edges[a.index()][layout.edge_idx(a, n + GHOST, t + GHOST, m)] = v;
                    }
                }
            }
        }
        Ok(())
    }

    pub fn stage1(&mut self, k: f64) -> Result<()> {
        Self::reconstruct_and_solve(
            &mut self.field,
            &self.bc,
            self.t,
            self.gamma,
            &self.opts,
            &self.rules,
            Stage::ReconstructFull,
            self.parallel,
            &mut self.grp_n,
        )?;
        self.reconstructions += 1;
        let cells = self.update_cells(&self.grp_n, 0.5 * k, Stage::Intermediate, |g| {
            std::array::from_fn(|q| g.flux[q] + 0.25 * k * g.dfdt[q])
        })?;
        let nx = self.field.nx;
        for (c, v) in cells.into_iter().enumerate() {
            let idx = self.half.idx(c % nx + GHOST, c / nx + GHOST);
            self.half.averages[idx] = v;
        }
        let grp = &self.grp_n;
        Self::write_edges(
            &self.field,
            &mut self.half.edges,
            |a, e, m| interface_value_intermediate(&grp[a][e][m].point, k),
            self.gamma,
            Stage::Intermediate,
        )
    }

    pub fn stage2(&mut self, k: f64) -> Result<()> {
        Self::reconstruct_and_solve(
            &mut self.half,
            &self.bc,
            self.t + 0.5 * k,
            self.gamma,
            &self.opts,
            &self.rules,
            Stage::ReconstructHalf,
            self.parallel,
            &mut self.grp_half,
        )?;
        self.reconstructions += 1;
        // fourth-order flux needs both stages; pair them edge by edge
        let mut combined = self.grp_n.clone();
        for a in 0..2 {
            for (c, h) in combined[a].iter_mut().zip(&self.grp_half[a]) {
                for m in 0..2 {
                    for q in 0..4 {
                        c[m].dfdt[q] = c[m].dfdt[q] / 3.0 + 2.0 * h[m].dfdt[q] / 3.0;
                    }
                }
            }
        }
        let cells = self.update_cells(&combined, k, Stage::Final, |g| {
            std::array::from_fn(|q| g.flux[q] + 0.5 * k * g.dfdt[q])
        })?;
        let (gn, gh) = (&self.grp_n, &self.grp_half);
        let mut next_edges = self.field.edges.clone();
        Self::write_edges(
            &self.field,
            &mut next_edges,
            |a, e, m| interface_value_final(&gn[a][e][m].point, &gh[a][e][m].point, k),
            self.gamma,
            Stage::Final,
        )?;
        // boundary outflow with the same fluxes that updated the cells
        let f = &self.field;
        let f4 = |g: &GrpFlux<4>| -> [f64; 4] { std::array::from_fn(|q| g.flux[q] + 0.5 * k * g.dfdt[q]) };
        let mut out = [0.0; 4];
        for j in 0..f.ny {
            let w = Self::edge_flux(&combined, f, Axis::X, 0, j, f4);
            let e = Self::edge_flux(&combined, f, Axis::X, f.nx, j, f4);
            for q in 0..4 {
                out[q] += k * f.hy * (e[q] - w[q]);
            }
        }
        for i in 0..f.nx {
            let s = Self::edge_flux(&combined, f, Axis::Y, 0, i, f4);
            let n = Self::edge_flux(&combined, f, Axis::Y, f.ny, i, f4);
            for q in 0..4 {
                out[q] += k * f.hx * (n[q] - s[q]);
            }
        }
        let nx = self.field.nx;
        self.field.edges = next_edges;
        for (c, v) in cells.into_iter().enumerate() {
            let idx = self.field.idx(c % nx + GHOST, c / nx + GHOST);
            self.field.averages[idx] = v;
        }
        for q in 0..4 {
            self.outflow[q] += out[q];
        }
        Ok(())
    }

    pub fn step(&mut self, k: f64) -> Result<StepReport> {
        let before = self.reconstructions;
        self.stage1(k)?;
        self.stage2(k)?;
        self.t += k;
        self.steps += 1;
        Ok(StepReport { dt: k, reconstructions: self.reconstructions - before })
    }

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

    pub fn conservation_drift(&self) -> f64 {
        relative_drift(&self.initial_total, &self.field.total(), &self.outflow)
    }
}
