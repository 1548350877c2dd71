//! Semi-discrete right-hand side: interface fluxes, source quadrature and
//! flux differences.

use rayon::prelude::*;

use super::discretization::Discretization;
use super::flux::cu_combine;
use crate::error::{Error, Result};
use crate::models::{swe, Model};
use crate::recon::{face_values, Direction, FaceLayout, FaceValues};
use crate::weno::{interp_plane, PlaneScratch};

/// Numerical fluxes through every face along one direction.
#[derive(Debug, Clone)]
pub struct DirectionFluxes {
    pub dir: Direction,
    pub layout: FaceLayout,
    /// Node-averaged flux, indexed `(face·n_rand + r)·nc + c`.
    pub flux: Vec<f64>,
    /// Largest `max(a⁺, −a⁻)` over all faces of this direction.
    pub max_speed: f64,
    /// Depth just below / above each face at every node,
    /// `(face·n_rand + r)·n_nodes + q`; empty without a bottom.
    pub depth_minus: Vec<f64>,
    pub depth_plus: Vec<f64>,
}

/// Interface fluxes and source terms of one stage.
#[derive(Debug, Clone)]
pub struct RhsBuffer {
    pub dirs: Vec<DirectionFluxes>,
    /// Cell-averaged source, in field layout.
    pub source: Vec<f64>,
}

impl RhsBuffer {
    /// Time derivative of every weighted average.
    pub fn rhs(&self, disc: &Discretization) -> Vec<f64> {
        let grid = &disc.grid;
        let nc = disc.n_components();
        let nr = grid.n_rand();
        let block = nr * nc;
        let ny = grid.ny();
        let mut out = self.source.clone();
        out.par_chunks_mut(block).enumerate().for_each(|(p, cell)| {
            let (ix, iy) = (p / ny, p % ny);
            for d in &self.dirs {
                let (j, line) = match d.dir {
                    Direction::X => (ix, iy),
                    Direction::Y => (iy, ix),
                };
                let lo = d.layout.face_id(j, line) * block;
                let hi = d.layout.face_id(j + 1, line) * block;
                let inv = 1.0 / d.layout.spacing(grid);
                for k in 0..block {
                    cell[k] -= (d.flux[hi + k] - d.flux[lo + k]) * inv;
                }
            }
        });
        out
    }

    /// Largest admissible step `K·min(Δ/max speed)` over the directions;
    /// `None` when every speed vanishes.
    pub fn cfl_dt(&self, disc: &Discretization, cfl: f64) -> Option<f64> {
        let speeds: Vec<(f64, f64)> =
            self.dirs.iter().map(|d| (d.max_speed, d.layout.spacing(&disc.grid))).collect();
        cfl_dt(&speeds, cfl)
    }
}

/// `K·min_d(Δ_d / s_d)` over pairs `(max speed s_d, spacing Δ_d)`,
/// ignoring directions at rest; `None` if all are at rest.
///
/// ```
/// use stochastic_fv::solver::cfl_dt;
/// let dt = cfl_dt(&[(4.0, 0.1), (2.0, 0.1)], 0.45).unwrap();
/// assert!((dt - 0.01125).abs() < 1e-15);
/// assert_eq!(cfl_dt(&[(0.0, 0.1)], 0.45), None);
/// ```
pub fn cfl_dt(speeds: &[(f64, f64)], cfl: f64) -> Option<f64> {
    speeds
        .iter()
        .filter(|(s, _)| *s > 0.0)
        .map(|(s, h)| cfl * h / s)
        .reduce(f64::min)
}

struct FaceScratch {
    plane: PlaneScratch,
    line: Vec<f64>,
    minus: Vec<f64>,
    plus: Vec<f64>,
    nodes: Vec<f64>,
    sm: Vec<f64>,
    sp: Vec<f64>,
    fm: Vec<f64>,
    fp: Vec<f64>,
    h: Vec<f64>,
}

impl FaceScratch {
    fn new(disc: &Discretization) -> Self {
        let nr = disc.grid.n_rand();
        let nn = disc.nodes.n_nodes();
        let nc = disc.n_components();
        let sw = disc.model.state_width();
        Self {
            plane: PlaneScratch::default(),
            line: vec![0.0; nr],
            minus: vec![0.0; nr * nn * nc],
            plus: vec![0.0; nr * nn * nc],
            nodes: vec![0.0; nr * nn],
            sm: vec![0.0; sw],
            sp: vec![0.0; sw],
            fm: vec![0.0; nc],
            fp: vec![0.0; nc],
            h: vec![0.0; nc],
        }
    }
}

fn relocate(err: Error, dir: Direction, face: usize, r: usize, q: usize) -> Error {
    let location = format!(
        "{}-face {face}, random cell {r}, node {q}",
        match dir {
            Direction::X => "x",
            Direction::Y => "y",
        }
    );
    match err {
        Error::Inadmissible { detail, .. } => Error::Inadmissible { location, detail },
        Error::NonFinite { .. } => Error::NonFinite { location },
        other => other,
    }
}

/// Interpolates one face's reconstructed values (all random cells) to the
/// nodes: `out[(r·n_nodes + q)·nc + c]`.
fn nodes_of_face(
    disc: &Discretization,
    src: &[f64],
    out: &mut [f64],
    s: &mut FaceScratch,
) -> Result<()> {
    let grid = &disc.grid;
    let nr = grid.n_rand();
    let nn = disc.nodes.n_nodes();
    let nc = disc.n_components();
    let n_eta = grid.eta().map(|a| a.n_cells());
    for c in 0..nc {
        for r in 0..nr {
            s.line[r] = src[r * nc + c];
        }
        interp_plane(&s.line, grid.n_xi(), n_eta, &disc.scheme.weno, &mut s.nodes, &mut s.plane)?;
        for (k, v) in s.nodes.iter().enumerate() {
            out[k * nc + c] = *v;
        }
    }
    debug_assert_eq!(s.nodes.len(), nr * nn);
    Ok(())
}

fn face_fluxes(
    disc: &Discretization,
    fv: &FaceValues,
    face: usize,
    flux: &mut [f64],
    depth: Option<(&mut [f64], &mut [f64])>,
    s: &mut FaceScratch,
) -> Result<f64> {
    let dir = fv.layout.dir;
    let nr = disc.grid.n_rand();
    let nn = disc.nodes.n_nodes();
    let nc = disc.n_components();
    let model = &disc.model;
    let block = nr * nc;
    let (mut minus, mut plus) = (std::mem::take(&mut s.minus), std::mem::take(&mut s.plus));
    let res = (|| {
        nodes_of_face(disc, &fv.minus[face * block..(face + 1) * block], &mut minus, s)?;
        nodes_of_face(disc, &fv.plus[face * block..(face + 1) * block], &mut plus, s)?;
        Ok::<(), Error>(())
    })();
    let out = res.and_then(|()| {
        let mut depth = depth;
        let centre = disc.nodes.center_node();
        let mut max_speed = 0.0_f64;
        for r in 0..nr {
            let w = disc.nodes.weights(r);
            let gamma = &disc.gamma[r * nn..(r + 1) * nn];
            let state = |vals: &[f64], q: usize, out: &mut [f64]| {
                let o = (r * nn + q) * nc;
                let z = disc.face_bottom(dir, face, r, q);
                model.face_state(&vals[o..o + nc], z, out);
            };
            state(&minus, centre, &mut s.sm);
            state(&plus, centre, &mut s.sp);
            let g0 = gamma[centre];
            let (l1, n1) =
                model.eigen_bounds(&s.sm, dir, g0).map_err(|e| relocate(e, dir, face, r, centre))?;
            let (l2, n2) =
                model.eigen_bounds(&s.sp, dir, g0).map_err(|e| relocate(e, dir, face, r, centre))?;
            let am = l1.min(l2).min(0.0);
            let ap = n1.max(n2).max(0.0);
            if !(am.is_finite() && ap.is_finite()) {
                return Err(relocate(
                    Error::NonFinite { location: String::new() },
                    dir,
                    face,
                    r,
                    centre,
                ));
            }
            max_speed = max_speed.max(ap).max(-am);
            let acc = &mut flux[r * nc..(r + 1) * nc];
            acc.fill(0.0);
            for q in 0..nn {
                state(&minus, q, &mut s.sm);
                state(&plus, q, &mut s.sp);
                model.flux(&s.sm, dir, gamma[q], &mut s.fm).map_err(|e| relocate(e, dir, face, r, q))?;
                model.flux(&s.sp, dir, gamma[q], &mut s.fp).map_err(|e| relocate(e, dir, face, r, q))?;
                cu_combine(&s.sm[..nc], &s.sp[..nc], &s.fm, &s.fp, am, ap, &mut s.h);
                for c in 0..nc {
                    acc[c] += w[q] * s.h[c];
                }
                if let Some((dm, dp)) = depth.as_mut() {
                    dm[r * nn + q] = s.sm[0];
                    dp[r * nn + q] = s.sp[0];
                }
            }
            if let Some(c) = acc.iter().position(|v| !v.is_finite()) {
                return Err(relocate(
                    Error::NonFinite { location: String::new() },
                    dir,
                    face,
                    r,
                    c,
                ));
            }
        }
        Ok(max_speed)
    });
    s.minus = minus;
    s.plus = plus;
    out
}

impl Discretization {
    /// Fluxes through every face along `dir` for the weighted averages `values`.
    pub fn direction_fluxes(&self, values: &[f64], dir: Direction) -> Result<DirectionFluxes> {
        let grid = &self.grid;
        let nr = grid.n_rand();
        let nn = self.nodes.n_nodes();
        let nc = self.n_components();
        let recon = self.reconstruction_values(values);
        let fv = face_values(
            &recon,
            grid,
            nc,
            self.nodes.center_densities(),
            dir,
            self.scheme.slope,
            self.scheme.bc(dir),
        );
        let nf = fv.layout.n_faces();
        let mut flux = vec![0.0; nf * nr * nc];
        let mut speeds = vec![0.0; nf];
        let with_depth = self.bottom.is_some();
        let dlen = if with_depth { nf * nr * nn } else { 0 };
        let mut depth_minus = vec![0.0; dlen];
        let mut depth_plus = vec![0.0; dlen];
        if with_depth {
            flux.par_chunks_mut(nr * nc)
                .zip(depth_minus.par_chunks_mut(nr * nn))
                .zip(depth_plus.par_chunks_mut(nr * nn))
                .zip(speeds.par_iter_mut())
                .enumerate()
                .try_for_each_init(
                    || FaceScratch::new(self),
                    |s, (f, (((fl, dm), dp), sp))| {
                        *sp = face_fluxes(self, &fv, f, fl, Some((dm, dp)), s)?;
                        Ok::<(), Error>(())
                    },
                )?;
        } else {
            flux.par_chunks_mut(nr * nc).zip(speeds.par_iter_mut()).enumerate().try_for_each_init(
                || FaceScratch::new(self),
                |s, (f, (fl, sp))| {
                    *sp = face_fluxes(self, &fv, f, fl, None, s)?;
                    Ok::<(), Error>(())
                },
            )?;
        }
        let max_speed = speeds.iter().copied().fold(0.0, f64::max);
        Ok(DirectionFluxes { dir, layout: fv.layout, flux, max_speed, depth_minus, depth_plus })
    }

    /// Well-balanced bottom source for the momentum components, in field layout.
    fn bottom_source(&self, dirs: &[DirectionFluxes]) -> Vec<f64> {
        let grid = &self.grid;
        let nc = self.n_components();
        let nr = grid.n_rand();
        let nn = self.nodes.n_nodes();
        let mut out = vec![0.0; grid.n_phys() * nr * nc];
        let g = match &self.model {
            Model::ShallowWater(m) => m.g,
            Model::Euler(_) => return out,
        };
        let ny = grid.ny();
        out.par_chunks_mut(nr * nc).enumerate().for_each(|(p, cell)| {
            let (ix, iy) = (p / ny, p % ny);
            for d in dirs {
                let (j, line) = match d.dir {
                    Direction::X => (ix, iy),
                    Direction::Y => (iy, ix),
                };
                let comp = match d.dir {
                    Direction::X => 1,
                    Direction::Y => 2,
                };
                let (lo, hi) = (d.layout.face_id(j, line), d.layout.face_id(j + 1, line));
                let inv = 1.0 / d.layout.spacing(grid);
                for r in 0..nr {
                    let w = self.nodes.weights(r);
                    let mut s = 0.0;
                    for q in 0..nn {
                        let h_left = d.depth_plus[(lo * nr + r) * nn + q];
                        let h_right = d.depth_minus[(hi * nr + r) * nn + q];
                        let z_left = self.face_bottom(d.dir, lo, r, q);
                        let z_right = self.face_bottom(d.dir, hi, r, q);
                        s += w[q] * swe::swe_wb_source(h_left, h_right, z_left, z_right, g);
                    }
                    cell[r * nc + comp] += s * inv;
                }
            }
        });
        out
    }

    /// Fluxes and sources of one stage.
    pub fn assemble(&self, values: &[f64]) -> Result<RhsBuffer> {
        let dirs = self
            .directions()
            .iter()
            .map(|&d| self.direction_fluxes(values, d))
            .collect::<Result<Vec<_>>>()?;
        let source = self.bottom_source(&dirs);
        Ok(RhsBuffer { dirs, source })
    }

    /// Semi-discrete right-hand side without flux limiting.
    pub fn assemble_rhs(&self, values: &[f64]) -> Result<Vec<f64>> {
        Ok(self.assemble(values)?.rhs(self))
    }
}
