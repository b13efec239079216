//! Run configuration: a TOML file and command-line flags map onto the same
//! struct, flags applied last.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::cases::{Case, GAMMA};
use crate::error::{Result, SolverError};
use crate::recon::{DerivativeMode, ReconOptions, Scheme, Variables, DEFAULT_EPS};

/// Largest mesh accepted from user input, per direction.
pub const MAX_CELLS: usize = 1 << 20;

/// Structured-grid output format for 2D fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GridFormat {
    /// Whitespace-free CSV `x,y,rho,u,v,p`.
    #[default]
    Table,
    /// Legacy VTK structured points.
    Vtk,
}

impl std::str::FromStr for GridFormat {
    type Err = SolverError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(GridFormat::Table),
            "vtk" => Ok(GridFormat::Vtk),
            _ => Err(SolverError::Config(format!("unknown grid format '{s}' (expected table or vtk)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields, rename_all = "kebab-case")]
pub struct RunConfig {
    pub case: String,
    /// Cells in x; defaults to the case's first mesh.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cells: Option<usize>,
    /// Cells in y for 2D cases; defaults to the case's aspect ratio.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cells_y: Option<usize>,
    pub scheme: Scheme,
    /// Schemes compared by a convergence run; empty means `scheme` alone.
    pub schemes: Vec<Scheme>,
    pub derivative: DerivativeMode,
    pub variables: Variables,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cfl: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_end: Option<f64>,
    pub gamma: f64,
    pub eps: f64,
    /// Meshes of a convergence run; empty means the case defaults.
    pub meshes: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<PathBuf>,
    pub format: GridFormat,
    /// Single-threaded execution.
    pub deterministic: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            case: Case::Smooth.name().to_string(),
            cells: None,
            cells_y: None,
            scheme: Scheme::Hweno5,
            schemes: Vec::new(),
            derivative: DerivativeMode::Lagrange,
            variables: Variables::Characteristic,
            cfl: None,
            t_end: None,
            gamma: GAMMA,
            eps: DEFAULT_EPS,
            meshes: Vec::new(),
            output: None,
            summary: None,
            format: GridFormat::Table,
            deterministic: false,
        }
    }
}

impl RunConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| SolverError::Config(e.message().to_string()))?;
        Ok(cfg)
    }

    pub fn to_toml_string(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| SolverError::Config(e.to_string()))
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| SolverError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    pub fn case(&self) -> Result<Case> {
        Case::from_name(&self.case)
    }

    pub fn recon_options(&self) -> ReconOptions {
        ReconOptions { scheme: self.scheme, derivative: self.derivative, variables: self.variables, eps: self.eps }
    }

    pub fn schemes(&self) -> Vec<Scheme> {
        if self.schemes.is_empty() {
            vec![self.scheme]
        } else {
            self.schemes.clone()
        }
    }

    pub fn cells_or_default(&self) -> Result<usize> {
        Ok(self.cells.unwrap_or(self.case()?.spec().meshes[0]))
    }

    pub fn meshes_or_default(&self) -> Result<Vec<usize>> {
        if self.meshes.is_empty() {
            Ok(self.case()?.spec().meshes)
        } else {
            Ok(self.meshes.clone())
        }
    }

    /// Checks everything that can be checked without running.
    pub fn validate(&self) -> Result<()> {
        let case = self.case()?;
        let positive = |name: &str, v: Option<f64>| match v {
            Some(x) if !(x > 0.0 && x.is_finite()) => Err(SolverError::Config(format!("{name} must be positive, got {x}"))),
            _ => Ok(()),
        };
        positive("cfl", self.cfl)?;
        positive("t-end", self.t_end)?;
        positive("eps", Some(self.eps))?;
        crate::euler::check_gamma(self.gamma).map_err(|e| SolverError::Config(e.to_string()))?;
        for (name, v) in [("cells", self.cells), ("cells-y", self.cells_y)] {
            if let Some(n) = v {
                check_cells(name, n)?;
            }
        }
        for &m in &self.meshes {
            check_cells("meshes", m)?;
        }
        if self.cells_y.is_some() && case.spec().dims == 1 {
            return Err(SolverError::Config(format!("cells-y given for one-dimensional case {}", case.name())));
        }
        Ok(())
    }
}

fn check_cells(name: &str, n: usize) -> Result<()> {
    if n == 0 || n > MAX_CELLS {
        return Err(SolverError::Config(format!("{name} must be in 1..={MAX_CELLS}, got {n}")));
    }
    Ok(())
}

/// Comma-separated mesh sizes, e.g. `"40,80,160"`.
pub fn parse_mesh_list(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for item in text.split(',') {
        let item = item.trim();
        let n: usize = item.parse().map_err(|_| SolverError::Config(format!("bad mesh size '{item}'")))?;
        check_cells("mesh size", n)?;
        out.push(n);
    }
    Ok(out)
}
