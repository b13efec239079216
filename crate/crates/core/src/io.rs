//! Text output: 1D profiles, 2D structured grids and run summaries.
//!
//! Numbers are written with 17 significant digits so files round-trip to
//! the same `f64` values.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use crate::config::GridFormat;
use crate::error::Result;
use crate::euler::{d1, d2};
use crate::recon::{CellField1d, GHOST};
use crate::recon2d::CellField2d;

#[inline]
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

/// CSV `x,rho,v,p`, one row per cell centre.
pub fn write_profile_csv<W: Write>(mut w: W, field: &CellField1d, gamma: f64) -> Result<()> {
    writeln!(w, "x,rho,v,p")?;
    for (j, u) in field.interior().iter().enumerate() {
        let p = d1::cons_to_prim(u, gamma)?;
        writeln!(w, "{},{},{},{}", num(field.centre(j)), num(p.rho), num(p.vel[0]), num(p.p))?;
    }
    Ok(())
}

/// 2D cell-centre data. Rows are ordered with `x` varying fastest:
/// `(i, j)` is row `j * nx + i`.
pub fn write_grid_2d<W: Write>(mut w: W, field: &CellField2d, gamma: f64, format: GridFormat) -> Result<()> {
    let (nx, ny) = (field.nx, field.ny);
    let mut prims = Vec::with_capacity(nx * ny);
    for j in 0..ny {
        for i in 0..nx {
            prims.push(d2::cons_to_prim(&field.averages[field.idx(i + GHOST, j + GHOST)], gamma)?);
        }
    }
    match format {
        GridFormat::Table => {
            writeln!(w, "x,y,rho,u,v,p")?;
            for (c, p) in prims.iter().enumerate() {
                let [x, y] = field.centre(c % nx + GHOST, c / nx + GHOST);
                writeln!(w, "{},{},{},{},{},{}", num(x), num(y), num(p.rho), num(p.vel[0]), num(p.vel[1]), num(p.p))?;
            }
        }
        GridFormat::Vtk => {
            let [x0, y0] = field.centre(GHOST, GHOST);
            writeln!(w, "# vtk DataFile Version 3.0")?;
            writeln!(w, "grp-hweno cell averages")?;
            writeln!(w, "ASCII")?;
            writeln!(w, "DATASET STRUCTURED_POINTS")?;
            writeln!(w, "DIMENSIONS {nx} {ny} 1")?;
            writeln!(w, "ORIGIN {} {} 0", num(x0), num(y0))?;
            writeln!(w, "SPACING {} {} 1", num(field.hx), num(field.hy))?;
            writeln!(w, "POINT_DATA {}", nx * ny)?;
            for (name, pick) in [("rho", 0usize), ("p", 3)] {
                writeln!(w, "SCALARS {name} double 1")?;
                writeln!(w, "LOOKUP_TABLE default")?;
                for p in &prims {
                    let v = if pick == 0 { p.rho } else { p.p };
                    writeln!(w, "{}", num(v))?;
                }
            }
            writeln!(w, "VECTORS velocity double")?;
            for p in &prims {
                writeln!(w, "{} {} 0", num(p.vel[0]), num(p.vel[1]))?;
            }
        }
    }
    Ok(())
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

pub fn write_profile_csv_file(path: &Path, field: &CellField1d, gamma: f64) -> Result<()> {
    let mut w = create(path)?;
    write_profile_csv(&mut w, field, gamma)?;
    w.flush()?;
    Ok(())
}

pub fn write_grid_2d_file(path: &Path, field: &CellField2d, gamma: f64, format: GridFormat) -> Result<()> {
    let mut w = create(path)?;
    write_grid_2d(&mut w, field, gamma, format)?;
    w.flush()?;
    Ok(())
}

pub fn write_json_file<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut w = create(path)?;
    serde_json::to_writer_pretty(&mut w, value).map_err(std::io::Error::from)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}
