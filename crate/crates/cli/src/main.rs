use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use grp_hweno::cases::Case;
use grp_hweno::config::{parse_mesh_list, GridFormat, RunConfig};
use grp_hweno::driver::{run_convergence, run_solve};
use grp_hweno::recon::{DerivativeMode, Scheme, Variables};
use grp_hweno::SolverError;

const EXIT_CONFIG: u8 = 2;
const EXIT_SOLVER: u8 = 3;

/// Finite-volume Euler solver: two-stage GRP time stepping with HWENO5 or
/// WENO5 reconstruction.
#[derive(Parser)]
#[command(name = "grp-hweno", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one case to its final time.
    Solve(RunArgs),
    /// Density error table over a mesh sequence.
    Convergence(RunArgs),
    /// List the built-in cases.
    ListCases,
}

#[derive(Args)]
struct RunArgs {
    /// TOML run configuration; flags override its entries.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    case: Option<String>,
    #[arg(long)]
    cells: Option<usize>,
    #[arg(long)]
    cells_y: Option<usize>,
    /// hweno5 or weno5
    #[arg(long)]
    scheme: Option<Scheme>,
    /// Schemes for a convergence run, comma separated.
    #[arg(long, value_delimiter = ',')]
    schemes: Vec<Scheme>,
    /// lagrange or hermite-ablation
    #[arg(long)]
    derivative: Option<DerivativeMode>,
    /// characteristic or componentwise
    #[arg(long)]
    variables: Option<Variables>,
    #[arg(long)]
    cfl: Option<f64>,
    #[arg(long)]
    t_end: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    eps: Option<f64>,
    /// Mesh sizes for a convergence run, e.g. 40,80,160.
    #[arg(long)]
    meshes: Option<String>,
    /// Profile CSV, 2D grid file or convergence table.
    #[arg(long)]
    output: Option<PathBuf>,
    /// JSON run summary.
    #[arg(long)]
    summary: Option<PathBuf>,
    /// table or vtk
    #[arg(long)]
    format: Option<GridFormat>,
    /// Single-threaded execution.
    #[arg(long)]
    deterministic: bool,
}

impl RunArgs {
    fn into_config(self) -> Result<RunConfig, SolverError> {
        let mut cfg = match &self.config {
            Some(path) => RunConfig::load(path)?,
            None => RunConfig::default(),
        };
        if let Some(v) = self.case {
            cfg.case = v;
        }
        if let Some(v) = self.cells {
            cfg.cells = Some(v);
        }
        if let Some(v) = self.cells_y {
            cfg.cells_y = Some(v);
        }
        if let Some(v) = self.scheme {
            cfg.scheme = v;
        }
        if !self.schemes.is_empty() {
            cfg.schemes = self.schemes;
        }
        if let Some(v) = self.derivative {
            cfg.derivative = v;
        }
        if let Some(v) = self.variables {
            cfg.variables = v;
        }
        if let Some(v) = self.cfl {
            cfg.cfl = Some(v);
        }
        if let Some(v) = self.t_end {
            cfg.t_end = Some(v);
        }
        if let Some(v) = self.gamma {
            cfg.gamma = v;
        }
        if let Some(v) = self.eps {
            cfg.eps = v;
        }
        if let Some(v) = self.meshes {
            cfg.meshes = parse_mesh_list(&v)?;
        }
        if let Some(v) = self.output {
            cfg.output = Some(v);
        }
        if let Some(v) = self.summary {
            cfg.summary = Some(v);
        }
        if let Some(v) = self.format {
            cfg.format = v;
        }
        cfg.deterministic |= self.deterministic;
        Ok(cfg)
    }
}

fn exit_code(e: &SolverError) -> u8 {
    match e {
        SolverError::Config(_) | SolverError::UnknownCase { .. } | SolverError::NoReference(_) | SolverError::Io(_) => {
            EXIT_CONFIG
        }
        _ => EXIT_SOLVER,
    }
}

fn list_cases() {
    for case in Case::ALL {
        let s = case.spec();
        let meshes: Vec<String> = s.meshes.iter().map(|m| m.to_string()).collect();
        println!(
            "{:<22} {}D  t_end={:<5} cfl={:<4} cells={:<20} {}",
            s.name,
            s.dims,
            s.t_end,
            s.cfl,
            meshes.join(","),
            s.summary
        );
    }
}

fn run(cli: Cli) -> Result<(), SolverError> {
    match cli.command {
        Command::ListCases => list_cases(),
        Command::Solve(args) => {
            let cfg = args.into_config()?;
            let out = run_solve(&cfg)?;
            println!("{}", serde_json::to_string_pretty(&out.record).expect("record serialises"));
        }
        Command::Convergence(args) => {
            let cfg = args.into_config()?;
            for report in run_convergence(&cfg)? {
                print!("{report}");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
