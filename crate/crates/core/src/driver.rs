//! Solve and convergence-study drivers used by the command-line tool.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::cases::{error_norms, exact_density_averages, setup_case, Case, Reference, RunState};
use crate::config::RunConfig;
use crate::error::{Result, SolverError};
use crate::integrator::RunSummary;
use crate::io;
use crate::recon::{ReconOptions, Scheme};

/// What a finished run reports.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunRecord {
    pub case: String,
    pub scheme: Scheme,
    pub derivative: &'static str,
    pub cells: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cells_y: Option<usize>,
    pub steps: usize,
    pub t: f64,
    pub wall_seconds: f64,
    pub conservation_drift: f64,
    pub reconstructions_per_step: [usize; 2],
    pub gamma: f64,
    pub cfl: f64,
}

#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub record: RunRecord,
    pub state: RunState,
}

fn run_state(state: &mut RunState, t_end: f64, deterministic: bool) -> Result<RunSummary> {
    match state {
        RunState::One(s) => s.run_until(t_end, |_| {}),
        RunState::Two(s) => {
            s.parallel = !deterministic;
            s.run_until(t_end, |_| {})
        }
    }
}

/// Set up, run to the final time and write whatever outputs `cfg` names.
pub fn run_solve(cfg: &RunConfig) -> Result<SolveOutcome> {
    cfg.validate()?;
    let case = cfg.case()?;
    let cells = cfg.cells_or_default()?;
    let (mut state, spec) = setup_case(&cfg.case, cells, cfg.cells_y, cfg.gamma, cfg.cfl, cfg.recon_options())?;
    let t_end = cfg.t_end.unwrap_or(spec.t_end);
    let start = Instant::now();
    let summary = run_state(&mut state, t_end, cfg.deterministic)?;
    let wall_seconds = start.elapsed().as_secs_f64();
    let cells_y = match &state {
        RunState::One(_) => None,
        RunState::Two(s) => Some(s.field.ny),
    };
    let record = RunRecord {
        case: case.name().to_string(),
        scheme: cfg.scheme,
        derivative: cfg.derivative.name(),
        cells,
        cells_y,
        steps: summary.steps,
        t: summary.t,
        wall_seconds,
        conservation_drift: summary.conservation_drift,
        reconstructions_per_step: [summary.min_reconstructions_per_step, summary.max_reconstructions_per_step],
        gamma: cfg.gamma,
        cfl: cfg.cfl.unwrap_or(spec.cfl),
    };
    if let Some(path) = &cfg.output {
        match &state {
            RunState::One(s) => io::write_profile_csv_file(path, &s.field, cfg.gamma)?,
            RunState::Two(s) => io::write_grid_2d_file(path, &s.field, cfg.gamma, cfg.format)?,
        }
    }
    if let Some(path) = &cfg.summary {
        io::write_json_file(path, &record)?;
    }
    Ok(SolveOutcome { record, state })
}

/// One mesh of a convergence study.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorRow {
    pub m: usize,
    pub seconds: f64,
    pub l1: f64,
    pub l1_order: Option<f64>,
    pub linf: f64,
    pub linf_order: Option<f64>,
}

/// Density errors of one scheme over a mesh sequence.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorReport {
    pub case: String,
    pub scheme: Scheme,
    pub t: f64,
    pub rows: Vec<ErrorRow>,
}

/// Observed order between consecutive meshes, `ln(e_c/e_f) / ln(m_f/m_c)`;
/// `None` when either error is zero or not finite.
pub fn observed_order(coarse: (usize, f64), fine: (usize, f64)) -> Option<f64> {
    let (ec, ef) = (coarse.1, fine.1);
    if ec > 0.0 && ef > 0.0 && ec.is_finite() && ef.is_finite() && fine.0 != coarse.0 {
        Some((ec / ef).ln() / (fine.0 as f64 / coarse.0 as f64).ln())
    } else {
        None
    }
}

/// Errors of a single run against the case's exact solution.
pub fn measure(case: Case, m: usize, gamma: f64, cfl: Option<f64>, t_end: f64, opts: ReconOptions) -> Result<(f64, f64, f64)> {
    let start = Instant::now();
    let mut s = case.setup_1d(m, gamma, cfl, opts)?;
    s.run_until(t_end, |_| {})?;
    let seconds = start.elapsed().as_secs_f64();
    let exact = exact_density_averages(case, m, t_end, gamma)?;
    let (l1, linf) = error_norms(&s.densities(), &exact, s.field.h);
    Ok((seconds, l1, linf))
}

/// Run every requested scheme on every mesh and tabulate density errors.
pub fn run_convergence(cfg: &RunConfig) -> Result<Vec<ErrorReport>> {
    cfg.validate()?;
    let case = cfg.case()?;
    let spec = case.spec();
    if !matches!(spec.reference, Reference::ExactFunction | Reference::ExactRiemann) || spec.dims != 1 {
        return Err(SolverError::NoReference(case.name().to_string()));
    }
    let meshes = cfg.meshes_or_default()?;
    let t_end = cfg.t_end.unwrap_or(spec.t_end);
    let mut reports = Vec::new();
    for scheme in cfg.schemes() {
        let opts = ReconOptions { scheme, ..cfg.recon_options() };
        let mut rows: Vec<ErrorRow> = Vec::with_capacity(meshes.len());
        for &m in &meshes {
            let (seconds, l1, linf) = measure(case, m, cfg.gamma, cfg.cfl, t_end, opts)?;
            let (l1_order, linf_order) = match rows.last() {
                Some(prev) => (observed_order((prev.m, prev.l1), (m, l1)), observed_order((prev.m, prev.linf), (m, linf))),
                None => (None, None),
            };
            rows.push(ErrorRow { m, seconds, l1, l1_order, linf, linf_order });
        }
        reports.push(ErrorReport { case: case.name().to_string(), scheme, t: t_end, rows });
    }
    if let Some(path) = &cfg.output {
        let mut text = String::new();
        for r in &reports {
            text += &r.to_string();
        }
        std::fs::write(path, text)?;
    }
    if let Some(path) = &cfg.summary {
        io::write_json_file(path, &reports)?;
    }
    Ok(reports)
}

impl fmt::Display for ErrorReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = |o: Option<f64>| o.map(|v| format!("{v:.2}")).unwrap_or_default();
        writeln!(f, "# {} {} t={}", self.case, self.scheme.name(), self.t)?;
        writeln!(f, "{:>6} {:>12} {:>12} {:>6} {:>12} {:>6}", "m", "cpu_s", "L1", "order", "Linf", "order")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>6} {:>12.3} {:>12.3e} {:>6} {:>12.3e} {:>6}",
                r.m,
                r.seconds,
                r.l1,
                order(r.l1_order),
                r.linf,
                order(r.linf_order)
            )?;
        }
        Ok(())
    }
}
