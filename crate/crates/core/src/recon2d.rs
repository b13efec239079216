//! Dimension-by-dimension reconstruction on rectangular grids.
//!
//! Every edge carries two Gauss points. For an edge with normal axis `a`
//! the pipeline is, in a frame rotated so that `a` is the local x axis:
//!
//! 1. tangential HWENO sweep of each cell row at the two Gauss abscissae,
//!    giving line averages across the cell in the normal direction;
//! 2. line moments at each Gauss abscissa from the evolved edge values;
//! 3. normal HWENO sweep of those line data: one-sided limits at the edge,
//!    normal derivative by four-cell interpolation;
//! 4. tangential derivative from five normal-sweep limits of the plain cell
//!    averages in neighbouring rows;
//! 5. acoustic GRP at each Gauss point.
//!
//! The y-normal pipeline is the x-normal pipeline applied to the rotated
//! state, so a field symmetric under transposition stays symmetric.

use rayon::prelude::*;

use crate::error::{Location, Result, Stage};
use crate::euler::{d2, Axis};
use crate::grp::{grp_flux_2d, GrpFlux, ReconTrace};
use crate::recon::hweno::{HermitePointRule, HermiteWindow};
use crate::recon::weno::WenoPointRule;
use crate::recon::{
    hermite_derivatives, hweno_traces, lagrange_derivative, weno_traces, DerivativeMode, Frame, ReconOptions, Scheme,
    Variables, GHOST,
};

/// Tangential Gauss abscissa of the first Gauss point, relative to the cell
/// centre in units of the cell size.
pub const GAUSS_XI: f64 = -0.288_675_134_594_812_9;

/// Cell averages, edge Gauss values and scaled moments on a `nx x ny` grid
/// with `GHOST` ghost layers.
///
/// Cell `(i, j)` (storage indices) lives at `j * sx + i` with
/// `sx = nx + 2 GHOST`. Edges with normal `a` are indexed by normal edge
/// index `n` (edge `n` is the low face of cell `n`), tangential cell index
/// `t` and Gauss point `m` as `(t * (s_a + 1) + n) * 2 + m`; Gauss point 0
/// has the smaller tangential coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct CellField2d {
    pub nx: usize,
    pub ny: usize,
    pub hx: f64,
    pub hy: f64,
    pub x_min: f64,
    pub y_min: f64,
    pub averages: Vec<[f64; 4]>,
    pub edges: [Vec<[f64; 4]>; 2],
    /// `(h_x Δ_x u, h_y Δ_y u)` per storage cell.
    pub moments: [Vec<[f64; 4]>; 2],
}

impl CellField2d {
    pub fn new(nx: usize, ny: usize, x: [f64; 2], y: [f64; 2]) -> Self {
        let sx = nx + 2 * GHOST;
        let sy = ny + 2 * GHOST;
        CellField2d {
            nx,
            ny,
            hx: (x[1] - x[0]) / nx as f64,
            hy: (y[1] - y[0]) / ny as f64,
            x_min: x[0],
            y_min: y[0],
            averages: vec![[0.0; 4]; sx * sy],
            edges: [vec![[0.0; 4]; 2 * (sx + 1) * sy], vec![[0.0; 4]; 2 * (sy + 1) * sx]],
            moments: [vec![[0.0; 4]; sx * sy], vec![[0.0; 4]; sx * sy]],
        }
    }

    #[inline(always)]
    pub fn sx(&self) -> usize {
        self.nx + 2 * GHOST
    }

    #[inline(always)]
    pub fn sy(&self) -> usize {
        self.ny + 2 * GHOST
    }

    /// Storage extent along an axis.
    #[inline(always)]
    pub fn extent(&self, a: Axis) -> usize {
        match a {
            Axis::X => self.sx(),
            Axis::Y => self.sy(),
        }
    }

    pub fn cells_along(&self, a: Axis) -> usize {
        match a {
            Axis::X => self.nx,
            Axis::Y => self.ny,
        }
    }

    pub fn h(&self, a: Axis) -> f64 {
        match a {
            Axis::X => self.hx,
            Axis::Y => self.hy,
        }
    }

    #[inline(always)]
    pub fn idx(&self, i: usize, j: usize) -> usize {
        j * self.sx() + i
    }

    /// Cell index from (normal, tangential) indices relative to axis `a`.
    #[inline(always)]
    pub fn cell_idx(&self, a: Axis, n: usize, t: usize) -> usize {
        match a {
            Axis::X => self.idx(n, t),
            Axis::Y => self.idx(t, n),
        }
    }

    #[inline(always)]
    pub fn edge_idx(&self, a: Axis, n: usize, t: usize, m: usize) -> usize {
        (t * (self.extent(a) + 1) + n) * 2 + m
    }

    pub fn centre(&self, i: usize, j: usize) -> [f64; 2] {
        [
            self.x_min + (i as f64 - GHOST as f64 + 0.5) * self.hx,
            self.y_min + (j as f64 - GHOST as f64 + 0.5) * self.hy,
        ]
    }

    /// Coordinates of Gauss point `m` on edge `(a, n, t)`.
    pub fn edge_point(&self, a: Axis, n: usize, t: usize, m: usize) -> [f64; 2] {
        let xi = if m == 0 { GAUSS_XI } else { -GAUSS_XI };
        let normal = |origin: f64, h: f64| origin + (n as f64 - GHOST as f64) * h;
        let tangential = |origin: f64, h: f64| origin + (t as f64 - GHOST as f64 + 0.5 + xi) * h;
        match a {
            Axis::X => [normal(self.x_min, self.hx), tangential(self.y_min, self.hy)],
            Axis::Y => [tangential(self.x_min, self.hx), normal(self.y_min, self.hy)],
        }
    }

    pub fn interior_indices(&self) -> impl Iterator<Item = (usize, usize)> {
        let (nx, ny) = (self.nx, self.ny);
        (GHOST..GHOST + ny).flat_map(move |j| (GHOST..GHOST + nx).map(move |i| (i, j)))
    }

    pub fn total(&self) -> [f64; 4] {
        let mut s = [0.0; 4];
        let area = self.hx * self.hy;
        for (i, j) in self.interior_indices() {
            let u = self.averages[self.idx(i, j)];
            for c in 0..4 {
                s[c] += u[c] * area;
            }
        }
        s
    }

    /// Scaled moments of every storage cell from its edge Gauss values.
    pub fn update_moments(&mut self) {
        let (sx, sy) = (self.sx(), self.sy());
        for j in 0..sy {
            for i in 0..sx {
                let ex = |n: usize, m: usize| &self.edges[0][self.edge_idx(Axis::X, n, j, m)];
                let ey = |n: usize, m: usize| &self.edges[1][self.edge_idx(Axis::Y, n, i, m)];
                let (dx, dy) = crate::gradient::moments_2d(
                    [ex(i, 0), ex(i, 1)],
                    [ex(i + 1, 0), ex(i + 1, 1)],
                    [ey(j, 0), ey(j, 1)],
                    [ey(j + 1, 0), ey(j + 1, 1)],
                );
                let k = self.idx(i, j);
                self.moments[0][k] = dx;
                self.moments[1][k] = dy;
            }
        }
    }

    /// Storage copy with `x` and `y` exchanged and the momenta swapped.
    pub fn transposed(&self) -> CellField2d {
        let mut t = CellField2d::new(self.ny, self.nx, [self.y_min, self.y_min + self.hy * self.ny as f64], [
            self.x_min,
            self.x_min + self.hx * self.nx as f64,
        ]);
        t.hx = self.hy;
        t.hy = self.hx;
        for j in 0..self.sy() {
            for i in 0..self.sx() {
                let k = self.idx(i, j);
                let kt = t.idx(j, i);
                t.averages[kt] = d2::rotate(&self.averages[k], Axis::Y);
                t.moments[0][kt] = d2::rotate(&self.moments[1][k], Axis::Y);
                t.moments[1][kt] = d2::rotate(&self.moments[0][k], Axis::Y);
            }
        }
        for a in [Axis::X, Axis::Y] {
            let b = a.other();
            for (k, v) in self.edges[a.index()].iter().enumerate() {
                // identical (n, t, m) layout, axis relabelled
                t.edges[b.index()][k] = d2::rotate(v, Axis::Y);
            }
        }
        t
    }
}

/// Tangential derivative at the first Gauss abscissa (`xi = -sqrt(3)/6`)
/// from the averages of five consecutive cells centred on the point's cell.
#[inline(always)]
pub fn tangential_derivative_gauss(w: [f64; 5], h: f64) -> f64 {
    let r3 = 3f64.sqrt();
    ((9.0 + 2.0 * r3) * w[0] - (72.0 + 26.0 * r3) * w[1] + 48.0 * r3 * w[2] + (72.0 - 26.0 * r3) * w[3]
        - (9.0 - 2.0 * r3) * w[4])
        / (108.0 * h)
}

/// Same at the second abscissa, by mirroring.
#[inline(always)]
pub fn tangential_derivative_gauss_mirrored(w: [f64; 5], h: f64) -> f64 {
    -tangential_derivative_gauss([w[4], w[3], w[2], w[1], w[0]], h)
}

/// HWENO line values at the two Gauss abscissae of the centre cell.
#[inline(always)]
pub fn line_averages_at_gauss(rule: &HermitePointRule, w: &HermiteWindow, eps: f64) -> [f64; 2] {
    [rule.evaluate(w, eps), rule.evaluate(&w.mirrored(), eps)]
}

/// Scaled line moment `û(x_m, y_{j+1/2}) - û(x_m, y_{j-1/2})`.
#[inline(always)]
pub fn gauss_line_moment<const N: usize>(lower: &[f64; N], upper: &[f64; N]) -> [f64; N] {
    std::array::from_fn(|c| upper[c] - lower[c])
}

#[inline(always)]
fn rot(v: &[f64; 4], a: Axis) -> [f64; 4] {
    match a {
        Axis::X => *v,
        Axis::Y => [v[0], v[2], v[1], v[3]],
    }
}

fn rot_flux(g: GrpFlux<4>, a: Axis) -> GrpFlux<4> {
    match a {
        Axis::X => g,
        Axis::Y => GrpFlux {
            point: crate::grp::GrpPoint { u_star: rot(&g.point.u_star, a), dudt_star: rot(&g.point.dudt_star, a) },
            flux: rot(&g.flux, a),
            dfdt: rot(&g.dfdt, a),
        },
    }
}

fn frame(u: &[f64; 4], gamma: f64, local_axis: Axis, vars: Variables) -> Result<Option<Frame<4>>> {
    match vars {
        Variables::Componentwise => Ok(None),
        Variables::Characteristic => {
            let e = d2::eigensystem(u, gamma, local_axis)?;
            Ok(Some(Frame { left: e.left, right: e.right }))
        }
    }
}

fn frame_between(a: &[f64; 4], b: &[f64; 4], gamma: f64, vars: Variables) -> Result<Option<Frame<4>>> {
    let m: [f64; 4] = std::array::from_fn(|k| 0.5 * (a[k] + b[k]));
    frame(&m, gamma, Axis::X, vars)
}

/// Read-only rotated view of a field for the pipeline of normal axis `a`.
struct View<'f> {
    f: &'f CellField2d,
    a: Axis,
}

impl View<'_> {
    #[inline(always)]
    fn cell(&self, n: usize, t: usize) -> [f64; 4] {
        rot(&self.f.averages[self.f.cell_idx(self.a, n, t)], self.a)
    }
    #[inline(always)]
    fn normal_moment(&self, n: usize, t: usize) -> [f64; 4] {
        rot(&self.f.moments[self.a.index()][self.f.cell_idx(self.a, n, t)], self.a)
    }
    #[inline(always)]
    fn tangential_moment(&self, n: usize, t: usize) -> [f64; 4] {
        rot(&self.f.moments[self.a.other().index()][self.f.cell_idx(self.a, n, t)], self.a)
    }
    #[inline(always)]
    fn edge(&self, n: usize, t: usize, m: usize) -> [f64; 4] {
        rot(&self.f.edges[self.a.index()][self.f.edge_idx(self.a, n, t, m)], self.a)
    }
}

/// Precomputed scalar rules.
#[derive(Debug, Clone, Copy)]
pub struct Rules {
    pub hermite: HermitePointRule,
    pub weno: WenoPointRule,
}

impl Default for Rules {
    fn default() -> Self {
        Rules { hermite: HermitePointRule::at(GAUSS_XI), weno: WenoPointRule::at(GAUSS_XI) }
    }
}

/// Line averages of cell `(n, t)` at both tangential Gauss abscissae.
fn line_values(v: &View, n: usize, t: usize, gamma: f64, opts: &ReconOptions, rules: &Rules) -> Result<[[f64; 4]; 2]> {
    let centre = v.cell(n, t);
    let fr = frame(&centre, gamma, Axis::Y, opts.variables)?;
    let fr = fr.as_ref();
    let mut out = [[0.0; 4]; 2];
    match opts.scheme {
        Scheme::Hweno5 => {
            let c = [Frame::project(fr, &v.cell(n, t - 1)), Frame::project(fr, &centre), Frame::project(fr, &v.cell(n, t + 1))];
            let ml = Frame::project(fr, &v.tangential_moment(n, t - 1));
            let mr = Frame::project(fr, &v.tangential_moment(n, t + 1));
            for f in 0..4 {
                let w = HermiteWindow { left: c[0][f], centre: c[1][f], right: c[2][f], moment_left: ml[f], moment_right: mr[f] };
                let [a, b] = line_averages_at_gauss(&rules.hermite, &w, opts.eps);
                out[0][f] = a;
                out[1][f] = b;
            }
        }
        Scheme::Weno5 => {
            let c: [[f64; 4]; 5] = std::array::from_fn(|k| Frame::project(fr, &v.cell(n, t + k - 2)));
            for f in 0..4 {
                let w = [c[0][f], c[1][f], c[2][f], c[3][f], c[4][f]];
                out[0][f] = rules.weno.evaluate(&w, opts.eps);
                out[1][f] = rules.weno.evaluate(&[w[4], w[3], w[2], w[1], w[0]], opts.eps);
            }
        }
    }
    Ok([Frame::unproject(fr, &out[0]), Frame::unproject(fr, &out[1])])
}

/// One-sided limits at normal edge `ne` from per-cell data along the normal line.
#[inline(always)]
fn normal_traces(
    fr: Option<&Frame<4>>,
    c: &[[f64; 4]],
    m: &[[f64; 4]],
    ne: usize,
    opts: &ReconOptions,
) -> ([f64; 4], [f64; 4]) {
    match opts.scheme {
        Scheme::Hweno5 => {
            let c4 = [c[ne - 2], c[ne - 1], c[ne], c[ne + 1]];
            let m4 = [m[ne - 2], m[ne - 1], m[ne], m[ne + 1]];
            hweno_traces(fr, &c4, &m4, opts.eps)
        }
        Scheme::Weno5 => {
            let c6 = [c[ne - 3], c[ne - 2], c[ne - 1], c[ne], c[ne + 1], c[ne + 2]];
            weno_traces(fr, &c6, opts.eps)
        }
    }
}

/// GRP data at both Gauss points of every physical edge with normal `a`.
///
/// Output layout: `((t - GHOST) * (cells_a + 1) + (n - GHOST))`, i.e. rows
/// of edges ordered by tangential index. Moments must be current.
pub fn edge_grp(
    field: &CellField2d,
    a: Axis,
    gamma: f64,
    opts: &ReconOptions,
    rules: &Rules,
    stage: Stage,
    parallel: bool,
    out: &mut Vec<[GrpFlux<4>; 2]>,
) -> Result<()> {
    let v = View { f: field, a };
    let sn = field.extent(a);
    let nn = field.cells_along(a);
    let nt = field.cells_along(a.other());
    let hn = field.h(a);
    let ht = field.h(a.other());
    let row_len = nn + 1;

    // normal-sweep limits of the plain cell averages, rows GHOST-2 .. GHOST+nt+2
    let avg_rows = nt + 4;
    let avg_traces: Vec<Result<Vec<([f64; 4], [f64; 4])>>> = map_rows(avg_rows, parallel, |r| {
        let t = GHOST - 2 + r;
        let c: Vec<[f64; 4]> = (0..sn).map(|n| v.cell(n, t)).collect();
        let m: Vec<[f64; 4]> = (0..sn).map(|n| v.normal_moment(n, t)).collect();
        (GHOST..=GHOST + nn)
            .map(|ne| {
                let fr = frame_between(&c[ne - 1], &c[ne], gamma, opts.variables)
                    .map_err(|e| e.at(Location::Edge2d(a.index() as u8, ne - GHOST, t, 0), stage))?;
                Ok(normal_traces(fr.as_ref(), &c, &m, ne, opts))
            })
            .collect()
    });
    let avg_traces: Vec<Vec<([f64; 4], [f64; 4])>> = avg_traces.into_iter().collect::<Result<_>>()?;

    out.clear();
    out.resize(nt * row_len, [GrpFlux::default(); 2]);
    let rows: Vec<Result<Vec<[GrpFlux<4>; 2]>>> = map_rows(nt, parallel, |r| {
        let t = GHOST + r;
        let loc = |ne: usize, m: usize| Location::Edge2d(a.index() as u8, ne - GHOST, r, m as u8);
        let mut lines = [vec![[0.0; 4]; sn], vec![[0.0; 4]; sn]];
        for n in 0..sn {
            let lv = line_values(&v, n, t, gamma, opts, rules).map_err(|e| e.at(Location::Cell2d(n, t), stage))?;
            lines[0][n] = lv[0];
            lines[1][n] = lv[1];
        }
        let mut moms = [vec![[0.0; 4]; sn], vec![[0.0; 4]; sn]];
        for (m, mm) in moms.iter_mut().enumerate() {
            for (n, slot) in mm.iter_mut().enumerate() {
                *slot = gauss_line_moment(&v.edge(n, t, m), &v.edge(n + 1, t, m));
            }
        }
        let mut row = Vec::with_capacity(row_len);
        for ne in GHOST..=GHOST + nn {
            let cl = v.cell(ne - 1, t);
            let cr = v.cell(ne, t);
            let fr = frame_between(&cl, &cr, gamma, opts.variables).map_err(|e| e.at(loc(ne, 0), stage))?;
            let tr: [&([f64; 4], [f64; 4]); 5] = std::array::from_fn(|k| &avg_traces[r + k][ne - GHOST]);
            let mut pair = [GrpFlux::default(); 2];
            for m in 0..2 {
                let (u_minus, u_plus) = normal_traces(fr.as_ref(), &lines[m], &moms[m], ne, opts);
                let c4 = [lines[m][ne - 2], lines[m][ne - 1], lines[m][ne], lines[m][ne + 1]];
                let (dudx_minus, dudx_plus) = match opts.derivative {
                    DerivativeMode::Lagrange => {
                        let d = lagrange_derivative(&c4, hn);
                        (d, d)
                    }
                    DerivativeMode::HermiteAblation => {
                        let m4 = [moms[m][ne - 2], moms[m][ne - 1], moms[m][ne], moms[m][ne + 1]];
                        hermite_derivatives(&c4, &m4, hn)
                    }
                };
                let tangential = |side: usize| -> [f64; 4] {
                    std::array::from_fn(|f| {
                        let w: [f64; 5] = std::array::from_fn(|k| if side == 0 { tr[k].0[f] } else { tr[k].1[f] });
                        if m == 0 {
                            tangential_derivative_gauss(w, ht)
                        } else {
                            tangential_derivative_gauss_mirrored(w, ht)
                        }
                    })
                };
                let trace = ReconTrace { u_minus, u_plus, dudx_minus, dudx_plus };
                let g = grp_flux_2d(&trace, &tangential(0), &tangential(1), gamma).map_err(|e| e.at(loc(ne, m), stage))?;
                pair[m] = rot_flux(g, a);
            }
            row.push(pair);
        }
        Ok(row)
    });
    for (r, row) in rows.into_iter().enumerate() {
        out[r * row_len..(r + 1) * row_len].copy_from_slice(&row?);
    }
    Ok(())
}

fn map_rows<T: Send>(count: usize, parallel: bool, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    if parallel {
        (0..count).into_par_iter().map(f).collect()
    } else {
        (0..count).map(f).collect()
    }
}
