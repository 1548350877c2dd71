//! Piecewise-linear reconstruction in physical space.
//!
//! Slopes of the weighted averages are limited with the generalized minmod
//! function, and the resulting face values are divided by the density at the
//! random-cell center to give point values. One ghost cell per physical
//! boundary is used: a copy of the adjacent cell for free boundaries, the
//! opposite end of the domain for periodic ones. Ghost cells carry no slope.

use crate::error::{Error, Result};
use crate::grid::Grid;

/// `min` if all arguments are positive, `max` if all are negative, else 0.
///
/// ```
/// use stochastic_fv::recon::minmod;
/// assert_eq!(minmod(&[1.0, 2.0, 3.0]), 1.0);
/// assert_eq!(minmod(&[-1.0, 2.0, 3.0]), 0.0);
/// assert_eq!(minmod(&[-1.0, -2.0, -3.0]), -1.0);
/// ```
pub fn minmod(values: &[f64]) -> f64 {
    assert!(!values.is_empty(), "minmod of an empty list");
    if values.iter().all(|&v| v > 0.0) {
        values.iter().copied().fold(f64::INFINITY, f64::min)
    } else if values.iter().all(|&v| v < 0.0) {
        values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    } else {
        0.0
    }
}

#[inline]
pub fn minmod3(a: f64, b: f64, c: f64) -> f64 {
    if a > 0.0 && b > 0.0 && c > 0.0 {
        a.min(b).min(c)
    } else if a < 0.0 && b < 0.0 && c < 0.0 {
        a.max(b).max(c)
    } else {
        0.0
    }
}

/// Limiter parameter `θ ∈ [1, 2]`; larger values are less dissipative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlopeParams {
    theta: f64,
}

impl SlopeParams {
    pub fn new(theta: f64) -> Result<Self> {
        if !(1.0..=2.0).contains(&theta) {
            return Err(Error::Config(format!("minmod parameter θ = {theta} is outside [1, 2]")));
        }
        Ok(Self { theta })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// Boundary treatment at both ends of one physical direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// Zero-order extrapolation.
    Free,
    Periodic,
}

impl std::str::FromStr for Boundary {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "free" => Ok(Boundary::Free),
            "periodic" => Ok(Boundary::Periodic),
            other => Err(Error::Config(format!("unknown boundary condition `{other}`"))),
        }
    }
}

/// Physical direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    X,
    Y,
}

/// Index arithmetic for faces and cells along one physical direction.
///
/// Faces along `x` are numbered `fx·ny + iy` with `fx ∈ 0..=nx`; faces along
/// `y` are numbered `ix·(ny + 1) + fy` with `fy ∈ 0..=ny`. Face `f` along a
/// line separates cells `f − 1` and `f` of that line (with ghosts at the ends).
#[derive(Debug, Clone, Copy)]
pub struct FaceLayout {
    pub dir: Direction,
    /// Cells along the direction.
    pub n: usize,
    /// Number of lines (cells in the other direction).
    pub lines: usize,
    nx: usize,
    ny: usize,
}

impl FaceLayout {
    pub fn new(grid: &Grid, dir: Direction) -> Self {
        let (nx, ny) = (grid.nx(), grid.ny());
        match dir {
            Direction::X => Self { dir, n: nx, lines: ny, nx, ny },
            Direction::Y => Self { dir, n: ny, lines: nx, nx, ny },
        }
    }

    pub fn n_faces(&self) -> usize {
        (self.n + 1) * self.lines
    }

    /// Splits a face id into (face position along the direction, line).
    #[inline]
    pub fn split(&self, face: usize) -> (usize, usize) {
        match self.dir {
            Direction::X => (face / self.ny, face % self.ny),
            Direction::Y => (face % (self.ny + 1), face / (self.ny + 1)),
        }
    }

    #[inline]
    pub fn face_id(&self, pos: usize, line: usize) -> usize {
        match self.dir {
            Direction::X => pos * self.ny + line,
            Direction::Y => line * (self.ny + 1) + pos,
        }
    }

    /// Physical cell index of cell `j` on `line`.
    #[inline]
    pub fn cell(&self, j: usize, line: usize) -> usize {
        match self.dir {
            Direction::X => j * self.ny + line,
            Direction::Y => line * self.ny + j,
        }
    }

    /// Physical cells on the low and high side of a face, after ghost
    /// substitution. `None` never occurs for periodic boundaries.
    #[inline]
    pub fn neighbours(&self, face: usize, bc: Boundary) -> (usize, usize) {
        let (pos, line) = self.split(face);
        let left = if pos == 0 {
            match bc {
                Boundary::Free => 0,
                Boundary::Periodic => self.n - 1,
            }
        } else {
            pos - 1
        };
        let right = if pos == self.n {
            match bc {
                Boundary::Free => self.n - 1,
                Boundary::Periodic => 0,
            }
        } else {
            pos
        };
        (self.cell(left, line), self.cell(right, line))
    }

    /// `true` when the low (`low = true`) or high side of the face is a free-boundary ghost.
    #[inline]
    pub fn is_ghost_side(&self, face: usize, bc: Boundary, low: bool) -> bool {
        if bc == Boundary::Periodic {
            return false;
        }
        let (pos, _) = self.split(face);
        if low {
            pos == 0
        } else {
            pos == self.n
        }
    }

    pub fn spacing(&self, grid: &Grid) -> f64 {
        match self.dir {
            Direction::X => grid.dx(),
            Direction::Y => grid.dy(),
        }
    }

    #[inline]
    fn nx(&self) -> usize {
        self.nx
    }
}

/// Limited half-increments `(Δ/2)·slope` of every weighted average along `dir`.
///
/// Layout matches the field: `out[(p·n_rand + r)·nc + c]`. Ghost cells have
/// zero slope, so cells next to a free boundary see a zero one-sided difference.
pub fn half_increments(
    values: &[f64],
    grid: &Grid,
    nc: usize,
    dir: Direction,
    params: SlopeParams,
    bc: Boundary,
) -> Vec<f64> {
    let layout = FaceLayout::new(grid, dir);
    let block = grid.n_rand() * nc;
    let theta = params.theta();
    let mut out = vec![0.0; values.len()];
    for line in 0..layout.lines {
        for j in 0..layout.n {
            let p = layout.cell(j, line);
            let jm = if j == 0 {
                match bc {
                    Boundary::Free => j,
                    Boundary::Periodic => layout.n - 1,
                }
            } else {
                j - 1
            };
            let jp = if j + 1 == layout.n {
                match bc {
                    Boundary::Free => j,
                    Boundary::Periodic => 0,
                }
            } else {
                j + 1
            };
            let (pm, pp) = (layout.cell(jm, line), layout.cell(jp, line));
            let (c0, cm, cp) = (p * block, pm * block, pp * block);
            for k in 0..block {
                let u = values[c0 + k];
                let um = values[cm + k];
                let up = values[cp + k];
                let s = minmod3(theta * (u - um), 0.5 * (up - um), theta * (up - u));
                out[c0 + k] = 0.5 * s;
            }
        }
    }
    let _ = layout.nx();
    out
}

/// One-sided point values at every face along one direction.
///
/// `minus[(f·n_rand + r)·nc + c]` is the value on the low side of face `f`
/// (from the cell below it), `plus` the value on the high side.
#[derive(Debug, Clone)]
pub struct FaceValues {
    pub layout: FaceLayout,
    pub n_rand: usize,
    pub nc: usize,
    pub minus: Vec<f64>,
    pub plus: Vec<f64>,
}

impl FaceValues {
    #[inline]
    pub fn minus_at(&self, face: usize, r: usize) -> &[f64] {
        let o = (face * self.n_rand + r) * self.nc;
        &self.minus[o..o + self.nc]
    }

    #[inline]
    pub fn plus_at(&self, face: usize, r: usize) -> &[f64] {
        let o = (face * self.n_rand + r) * self.nc;
        &self.plus[o..o + self.nc]
    }
}

/// Face values along `dir` from weighted averages `values` (field layout).
///
/// `center_density[r]` is the floored density at the center of random cell `r`.
pub fn face_values(
    values: &[f64],
    grid: &Grid,
    nc: usize,
    center_density: &[f64],
    dir: Direction,
    params: SlopeParams,
    bc: Boundary,
) -> FaceValues {
    let layout = FaceLayout::new(grid, dir);
    let nr = grid.n_rand();
    let half = half_increments(values, grid, nc, dir, params, bc);
    let nf = layout.n_faces();
    let mut minus = vec![0.0; nf * nr * nc];
    let mut plus = vec![0.0; nf * nr * nc];
    for f in 0..nf {
        let (pl, pr) = layout.neighbours(f, bc);
        let ghost_l = layout.is_ghost_side(f, bc, true);
        let ghost_r = layout.is_ghost_side(f, bc, false);
        for r in 0..nr {
            let inv = 1.0 / center_density[r];
            for c in 0..nc {
                let o = (f * nr + r) * nc + c;
                let il = (pl * nr + r) * nc + c;
                let ir = (pr * nr + r) * nc + c;
                let dl = if ghost_l { 0.0 } else { half[il] };
                let dr = if ghost_r { 0.0 } else { half[ir] };
                minus[o] = (values[il] + dl) * inv;
                plus[o] = (values[ir] - dr) * inv;
            }
        }
    }
    FaceValues { layout, n_rand: nr, nc, minus, plus }
}
