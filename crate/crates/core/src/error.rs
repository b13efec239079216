use std::fmt;

/// Where in the solve a state was found to be inadmissible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    /// Initial data projection.
    Initial,
    /// Data reconstructed at t^n (first reconstruction of a step).
    ReconstructFull,
    /// Data reconstructed at t^{n+1/2}.
    ReconstructHalf,
    /// Intermediate update to t^{n+1/2}.
    Intermediate,
    /// Final update to t^{n+1}.
    Final,
    /// Not attached to a time stage (stand-alone kernel call).
    Standalone,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Stage::Initial => "initial",
            Stage::ReconstructFull => "reconstruction t^n",
            Stage::ReconstructHalf => "reconstruction t^{n+1/2}",
            Stage::Intermediate => "intermediate stage",
            Stage::Final => "final stage",
            Stage::Standalone => "standalone",
        };
        f.write_str(s)
    }
}

/// Mesh location attached to a failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    None,
    Cell(usize),
    Interface(usize),
    Cell2d(usize, usize),
    /// Edge Gauss point: (normal axis 0/1, normal index, tangential index, gauss point).
    Edge2d(u8, usize, usize, u8),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Location::None => f.write_str("-"),
            Location::Cell(i) => write!(f, "cell {i}"),
            Location::Interface(i) => write!(f, "interface {i}"),
            Location::Cell2d(i, j) => write!(f, "cell ({i}, {j})"),
            Location::Edge2d(a, n, t, m) => {
                let axis = if a == 0 { 'x' } else { 'y' };
                write!(f, "{axis}-edge {n} row {t} gauss {m}")
            }
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SolverError {
    #[error("invalid state: {0}")]
    Domain(String),

    #[error("positivity failure at {location} ({stage}): density {rho:e}, pressure {p:e}")]
    Positivity {
        location: Location,
        stage: Stage,
        rho: f64,
        p: f64,
    },

    #[error("Riemann data generates vacuum (pressure positivity condition violated by {deficit:e})")]
    Vacuum { deficit: f64 },

    #[error("Riemann solver did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("unknown case '{name}'; known cases: {known}")]
    UnknownCase { name: String, known: String },

    #[error("case '{0}' has no exact reference solution")]
    NoReference(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl SolverError {
    /// Re-tag a positivity failure with the location and stage where it surfaced.
    pub fn at(self, location: Location, stage: Stage) -> Self {
        match self {
            SolverError::Positivity { rho, p, .. } => SolverError::Positivity {
                location,
                stage,
                rho,
                p,
            },
            other => other,
        }
    }

    pub fn is_positivity(&self) -> bool {
        matches!(self, SolverError::Positivity { .. } | SolverError::Vacuum { .. })
    }
}

pub type Result<T, E = SolverError> = std::result::Result<T, E>;
