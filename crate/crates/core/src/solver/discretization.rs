//! Precomputed tables shared by every right-hand-side evaluation.

use crate::error::{Error, Result};
use crate::grid::{Grid, Layout};
use crate::models::{Model, Point};
use crate::random_space::{JointPdf, NodeTable, GL_OFFSETS};
use crate::recon::{Boundary, Direction, FaceLayout, SlopeParams};
use crate::weno::{check_line_len, WenoParams};

/// Numerical parameters of the spatial discretization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeParams {
    pub slope: SlopeParams,
    pub weno: WenoParams,
    /// Boundary treatment along `x` and `y`.
    pub bc: [Boundary; 2],
}

impl SchemeParams {
    pub fn new(theta: f64, bc: Boundary) -> Result<Self> {
        Ok(Self { slope: SlopeParams::new(theta)?, weno: WenoParams::default(), bc: [bc, bc] })
    }

    pub fn bc(&self, dir: Direction) -> Boundary {
        match dir {
            Direction::X => self.bc[0],
            Direction::Y => self.bc[1],
        }
    }
}

/// Bottom samples at face nodes and weighted bottom cell averages.
#[derive(Debug, Clone)]
pub struct BottomTables {
    /// `Z` at `(face, r, q)` for faces along `x`.
    pub face_x: Vec<f64>,
    /// Same for faces along `y` (2-D only).
    pub face_y: Option<Vec<f64>>,
    /// Weighted cell averages `Z̄`, indexed `p·n_rand + r`.
    pub zbar: Vec<f64>,
}

/// Grid, model, density and all quantities derived from them once.
#[derive(Debug, Clone)]
pub struct Discretization {
    pub grid: Grid,
    pub model: Model,
    pub pdf: JointPdf,
    pub scheme: SchemeParams,
    pub nodes: NodeTable,
    /// Ratio of specific heats at every random node, `r·n_nodes + q`.
    pub gamma: Vec<f64>,
    pub bottom: Option<BottomTables>,
}

/// Random coordinates of node `q` of random cell `r`.
pub fn node_coords(grid: &Grid, r: usize, q: usize) -> (f64, f64) {
    let (xc, ec) = grid.rand_center(r);
    if grid.eta().is_some() {
        (xc + GL_OFFSETS[q / 3] * grid.dxi(), ec + GL_OFFSETS[q % 3] * grid.deta())
    } else {
        (xc + GL_OFFSETS[q] * grid.dxi(), ec)
    }
}

impl Discretization {
    pub fn new(grid: Grid, model: Model, pdf: JointPdf, scheme: SchemeParams) -> Result<Self> {
        if model.dims() != grid.layout().phys_dims() {
            return Err(Error::Config(format!(
                "a {}-D model cannot run on a {} grid",
                model.dims(),
                grid.layout().name()
            )));
        }
        if pdf.dims() != grid.layout().rand_dims() {
            return Err(Error::Config(format!(
                "{} random variable(s) in the density but the grid is {}",
                pdf.dims(),
                grid.layout().name()
            )));
        }
        check_line_len(grid.n_xi())?;
        if grid.layout() == Layout::D1S2 {
            check_line_len(grid.n_eta())?;
        }
        let nodes = NodeTable::new(&grid, &pdf);
        let nn = nodes.n_nodes();
        let nr = grid.n_rand();
        let mut gamma = Vec::with_capacity(nr * nn);
        for r in 0..nr {
            for q in 0..nn {
                let (xi, eta) = node_coords(&grid, r, q);
                gamma.push(model.gamma_at(xi, eta));
            }
        }
        if let Model::Euler(_) = &model {
            if let Some(g) = gamma.iter().find(|g| !(**g > 1.0)) {
                return Err(Error::Config(format!("ratio of specific heats {g} must exceed 1")));
            }
        }
        let bottom = match &model {
            Model::ShallowWater(m) => Some(bottom_tables(&grid, &nodes, |p| m.bottom.eval(p))?),
            Model::Euler(_) => None,
        };
        Ok(Self { grid, model, pdf, scheme, nodes, gamma, bottom })
    }

    pub fn n_components(&self) -> usize {
        self.model.n_components()
    }

    pub fn directions(&self) -> &'static [Direction] {
        if self.grid.layout() == Layout::D2S1 {
            &[Direction::X, Direction::Y]
        } else {
            &[Direction::X]
        }
    }

    /// Bottom at `(face, r, q)` for faces along `dir`; 0 without topography.
    #[inline]
    pub fn face_bottom(&self, dir: Direction, face: usize, r: usize, q: usize) -> f64 {
        match &self.bottom {
            None => 0.0,
            Some(b) => {
                let nn = self.nodes.n_nodes();
                let idx = (face * self.grid.n_rand() + r) * nn + q;
                match dir {
                    Direction::X => b.face_x[idx],
                    Direction::Y => b.face_y.as_ref().expect("y faces in 2-D")[idx],
                }
            }
        }
    }

    /// Weighted bottom averages (empty for models without topography).
    pub fn zbar(&self) -> &[f64] {
        self.bottom.as_ref().map_or(&[], |b| &b.zbar)
    }

    /// Values handed to the physical reconstruction: the field itself, or
    /// for shallow water the field with `h̄` replaced by `w̄ = h̄ + Z̄`.
    pub fn reconstruction_values(&self, values: &[f64]) -> Vec<f64> {
        let mut v = values.to_vec();
        if let Some(b) = &self.bottom {
            let nc = self.n_components();
            for (cell, z) in v.chunks_exact_mut(nc).zip(&b.zbar) {
                cell[0] += z;
            }
        }
        v
    }
}

/// Samples the bottom at every face node and forms `Z̄` with the trapezoidal
/// rule in space and the node weights in the random variables.
pub fn bottom_tables(
    grid: &Grid,
    nodes: &NodeTable,
    z: impl Fn(Point) -> f64,
) -> Result<BottomTables> {
    let nr = grid.n_rand();
    let nn = nodes.n_nodes();
    let sample = |dir: Direction| -> Result<Vec<f64>> {
        let layout = FaceLayout::new(grid, dir);
        let mut out = Vec::with_capacity(layout.n_faces() * nr * nn);
        for f in 0..layout.n_faces() {
            let (pos, line) = layout.split(f);
            let (x, y) = match dir {
                Direction::X => (grid.x().face(pos), grid.y().map_or(0.0, |a| a.center(line))),
                Direction::Y => (grid.x().center(line), grid.y().expect("2-D grid").face(pos)),
            };
            for r in 0..nr {
                for q in 0..nn {
                    let (xi, eta) = node_coords(grid, r, q);
                    let v = z(Point { x, y, xi, eta });
                    if !v.is_finite() {
                        return Err(Error::NonFinite {
                            location: format!("bottom at x = {x}, y = {y}, ξ = {xi}, η = {eta}"),
                        });
                    }
                    out.push(v);
                }
            }
        }
        Ok(out)
    };
    let face_x = sample(Direction::X)?;
    let face_y = if grid.layout() == Layout::D2S1 { Some(sample(Direction::Y)?) } else { None };
    let lx = FaceLayout::new(grid, Direction::X);
    let ly = face_y.as_ref().map(|_| FaceLayout::new(grid, Direction::Y));
    let ny = grid.ny();
    let mut zbar = Vec::with_capacity(grid.n_phys() * nr);
    for p in 0..grid.n_phys() {
        let (ix, iy) = (p / ny, p % ny);
        let fx = [lx.face_id(ix, iy), lx.face_id(ix + 1, iy)];
        for r in 0..nr {
            let w = nodes.weights(r);
            let at = |table: &[f64], f: usize, q: usize| table[(f * nr + r) * nn + q];
            let mut s = 0.0;
            match (&face_y, &ly) {
                (Some(fy_table), Some(ly)) => {
                    let fy = [ly.face_id(iy, ix), ly.face_id(iy + 1, ix)];
                    for q in 0..nn {
                        s += w[q]
                            * (at(&face_x, fx[0], q)
                                + at(&face_x, fx[1], q)
                                + at(fy_table, fy[0], q)
                                + at(fy_table, fy[1], q));
                    }
                    zbar.push(0.25 * s);
                }
                _ => {
                    for q in 0..nn {
                        s += w[q] * (at(&face_x, fx[0], q) + at(&face_x, fx[1], q));
                    }
                    zbar.push(0.5 * s);
                }
            }
        }
    }
    Ok(BottomTables { face_x, face_y, zbar })
}
