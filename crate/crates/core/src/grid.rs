//! Uniform tensor-product meshes and the weighted cell-average container.
//!
//! A [`Grid`] is the product of one or two physical axes with one or two
//! random axes. Three configurations are supported:
//!
//! | layout | physical | random |
//! |--------|----------|--------|
//! | [`Layout::D1S1`] | `x` | `ξ` |
//! | [`Layout::D1S2`] | `x` | `ξ, η` |
//! | [`Layout::D2S1`] | `x, y` | `ξ` |
//!
//! Missing axes are treated as having a single cell, which lets the solver
//! use one indexing scheme for all three layouts.
//!
//! [`Field`] stores one scalar per (physical cell, random cell, component).
//! Within a physical cell the random index varies fastest, so the values
//! along a random line at fixed physical position are contiguous (`η`
//! fastest, then `ξ`), followed by the components.

use crate::error::{Error, Result};

/// A uniform partition of `[lo, hi]` into `n_cells` cells.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    lo: f64,
    hi: f64,
    n_cells: usize,
}

impl Axis {
    pub fn new(lo: f64, hi: f64, n_cells: usize) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) {
            return Err(Error::Grid(format!("non-finite axis bounds [{lo}, {hi}]")));
        }
        if hi <= lo {
            return Err(Error::Grid(format!("axis upper bound {hi} must exceed lower bound {lo}")));
        }
        if n_cells == 0 {
            return Err(Error::Grid("axis needs at least one cell".into()));
        }
        Ok(Self { lo, hi, n_cells })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn n_cells(&self) -> usize {
        self.n_cells
    }

    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn spacing(&self) -> f64 {
        (self.hi - self.lo) / self.n_cells as f64
    }

    /// Position of face `j`, `0 ≤ j ≤ n_cells`. The last face is `hi` exactly.
    pub fn face(&self, j: usize) -> f64 {
        if j == self.n_cells {
            self.hi
        } else {
            self.lo + j as f64 * self.spacing()
        }
    }

    /// Center of cell `j` (zero-based), `lo + (j + 1/2)·spacing`.
    pub fn center(&self, j: usize) -> f64 {
        self.lo + (j as f64 + 0.5) * self.spacing()
    }

    pub fn centers(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_cells).map(|j| self.center(j))
    }
}

/// Dimensional configuration: number of physical and random dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Layout {
    D1S1,
    D1S2,
    D2S1,
}

impl Layout {
    pub fn phys_dims(self) -> usize {
        match self {
            Layout::D2S1 => 2,
            _ => 1,
        }
    }

    pub fn rand_dims(self) -> usize {
        match self {
            Layout::D1S2 => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Layout::D1S1 => "d1s1",
            Layout::D1S2 => "d1s2",
            Layout::D2S1 => "d2s1",
        }
    }
}

impl std::str::FromStr for Layout {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "d1s1" => Ok(Layout::D1S1),
            "d1s2" => Ok(Layout::D1S2),
            "d2s1" => Ok(Layout::D2S1),
            other => Err(Error::Config(format!("unknown layout `{other}`"))),
        }
    }
}

/// Tensor-product mesh over physical × random space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    layout: Layout,
    x: Axis,
    y: Option<Axis>,
    xi: Axis,
    eta: Option<Axis>,
}

impl Grid {
    /// Builds a grid from its axes, physical axes first then random axes:
    /// `[x, ξ]`, `[x, ξ, η]` or `[x, y, ξ]`.
    pub fn new(layout: Layout, axes: &[Axis]) -> Result<Self> {
        let expected = layout.phys_dims() + layout.rand_dims();
        if axes.len() != expected {
            return Err(Error::Grid(format!(
                "layout {} needs {expected} axes, got {}",
                layout.name(),
                axes.len()
            )));
        }
        let grid = match layout {
            Layout::D1S1 => Grid { layout, x: axes[0], y: None, xi: axes[1], eta: None },
            Layout::D1S2 => Grid { layout, x: axes[0], y: None, xi: axes[1], eta: Some(axes[2]) },
            Layout::D2S1 => Grid { layout, x: axes[0], y: Some(axes[1]), xi: axes[2], eta: None },
        };
        Ok(grid)
    }

    pub fn d1s1(x: Axis, xi: Axis) -> Self {
        Grid { layout: Layout::D1S1, x, y: None, xi, eta: None }
    }

    pub fn d1s2(x: Axis, xi: Axis, eta: Axis) -> Self {
        Grid { layout: Layout::D1S2, x, y: None, xi, eta: Some(eta) }
    }

    pub fn d2s1(x: Axis, y: Axis, xi: Axis) -> Self {
        Grid { layout: Layout::D2S1, x, y: Some(y), xi, eta: None }
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    pub fn x(&self) -> &Axis {
        &self.x
    }

    pub fn y(&self) -> Option<&Axis> {
        self.y.as_ref()
    }

    pub fn xi(&self) -> &Axis {
        &self.xi
    }

    pub fn eta(&self) -> Option<&Axis> {
        self.eta.as_ref()
    }

    pub fn nx(&self) -> usize {
        self.x.n_cells
    }

    pub fn ny(&self) -> usize {
        self.y.map_or(1, |a| a.n_cells)
    }

    pub fn n_xi(&self) -> usize {
        self.xi.n_cells
    }

    pub fn n_eta(&self) -> usize {
        self.eta.map_or(1, |a| a.n_cells)
    }

    pub fn n_phys(&self) -> usize {
        self.nx() * self.ny()
    }

    pub fn n_rand(&self) -> usize {
        self.n_xi() * self.n_eta()
    }

    pub fn n_cells(&self) -> usize {
        self.n_phys() * self.n_rand()
    }

    pub fn dx(&self) -> f64 {
        self.x.spacing()
    }

    pub fn dy(&self) -> f64 {
        self.y.map_or(1.0, |a| a.spacing())
    }

    pub fn dxi(&self) -> f64 {
        self.xi.spacing()
    }

    pub fn deta(&self) -> f64 {
        self.eta.map_or(1.0, |a| a.spacing())
    }

    /// Physical cell volume (`Δx` or `Δx·Δy`).
    pub fn phys_volume(&self) -> f64 {
        self.dx() * self.dy()
    }

    /// Random cell volume (`Δξ` or `Δξ·Δη`).
    pub fn rand_volume(&self) -> f64 {
        self.dxi() * self.deta()
    }

    pub fn cell_volume(&self) -> f64 {
        self.phys_volume() * self.rand_volume()
    }

    /// Flat physical index of `(ix, iy)`.
    #[inline]
    pub fn phys_index(&self, ix: usize, iy: usize) -> usize {
        ix * self.ny() + iy
    }

    /// Flat random index of `(l, m)`.
    #[inline]
    pub fn rand_index(&self, l: usize, m: usize) -> usize {
        l * self.n_eta() + m
    }

    /// Center of physical cell `p` as `(x, y)`; `y` is 0 in one dimension.
    pub fn phys_center(&self, p: usize) -> (f64, f64) {
        let ny = self.ny();
        let (ix, iy) = (p / ny, p % ny);
        (self.x.center(ix), self.y.map_or(0.0, |a| a.center(iy)))
    }

    /// Center of random cell `r` as `(ξ, η)`; `η` is 0 when there is one random axis.
    pub fn rand_center(&self, r: usize) -> (f64, f64) {
        let ne = self.n_eta();
        let (l, m) = (r / ne, r % ne);
        (self.xi.center(l), self.eta.map_or(0.0, |a| a.center(m)))
    }
}

/// Weighted cell averages, one scalar per (physical cell, random cell, component).
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    grid: Grid,
    n_components: usize,
    values: Vec<f64>,
}

impl Field {
    pub fn zeros(grid: Grid, n_components: usize) -> Self {
        Self { grid, n_components, values: vec![0.0; grid.n_cells() * n_components] }
    }

    pub fn from_values(grid: Grid, n_components: usize, values: Vec<f64>) -> Result<Self> {
        let expected = grid.n_cells() * n_components;
        if values.len() != expected {
            return Err(Error::Grid(format!(
                "field needs {expected} values, got {}",
                values.len()
            )));
        }
        let field = Self { grid, n_components, values };
        field.check_finite()?;
        Ok(field)
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn n_components(&self) -> usize {
        self.n_components
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Offset of the component block of cell `(p, r)`.
    #[inline]
    pub fn offset(&self, p: usize, r: usize) -> usize {
        (p * self.grid.n_rand() + r) * self.n_components
    }

    #[inline]
    pub fn cell(&self, p: usize, r: usize) -> &[f64] {
        let o = self.offset(p, r);
        &self.values[o..o + self.n_components]
    }

    #[inline]
    pub fn cell_mut(&mut self, p: usize, r: usize) -> &mut [f64] {
        let o = self.offset(p, r);
        let n = self.n_components;
        &mut self.values[o..o + n]
    }

    #[inline]
    pub fn get(&self, p: usize, r: usize, c: usize) -> f64 {
        self.values[self.offset(p, r) + c]
    }

    /// Errors on the first non-finite value, reporting its cell.
    pub fn check_finite(&self) -> Result<()> {
        match self.values.iter().position(|v| !v.is_finite()) {
            None => Ok(()),
            Some(i) => {
                let nc = self.n_components;
                let nr = self.grid.n_rand();
                let (cell, c) = (i / nc, i % nc);
                Err(Error::NonFinite {
                    location: format!(
                        "physical cell {}, random cell {}, component {c}",
                        cell / nr,
                        cell % nr
                    ),
                })
            }
        }
    }

    /// Integral of each component over the whole domain: Σ value × cell volume.
    ///
    /// Summation runs in storage order, so the result is reproducible bit for bit.
    pub fn total(&self) -> Vec<f64> {
        let nc = self.n_components;
        let mut sums = vec![0.0; nc];
        for cell in self.values.chunks_exact(nc) {
            for (s, v) in sums.iter_mut().zip(cell) {
                *s += v;
            }
        }
        let vol = self.grid.cell_volume();
        sums.iter().map(|s| s * vol).collect()
    }
}

/// Free-function form of [`Field::total`].
pub fn field_total(field: &Field) -> Vec<f64> {
    field.total()
}
