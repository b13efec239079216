//! Finite-volume solver for the 1D and 2D compressible Euler equations with
//! two-stage fourth-order GRP time stepping and fifth-order Hermite WENO
//! reconstruction whose first moments come from evolved interface values.
//! A classical WENO5 reconstruction is available as a baseline.

pub mod cases;
pub mod config;
pub mod driver;
pub mod error;
pub mod euler;
pub mod gradient;
pub mod grp;
pub mod integrator;
pub mod io;
pub mod linalg;
pub mod quadrature;
pub mod recon;
pub mod recon2d;
pub mod riemann;

pub use error::{Location, Result, SolverError, Stage};
