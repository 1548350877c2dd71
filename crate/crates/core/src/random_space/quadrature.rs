//! Three-point Gauss-Legendre rule on random cells.

use crate::error::{Error, Result};
use crate::grid::{Axis, Grid};
use crate::random_space::pdf::JointPdf;

/// Node offset in units of the random spacing, `√(3/5)/2 = √15/10`.
pub const KAPPA: f64 = 0.387_298_334_620_741_7;

/// Weights of the rule normalized to unit cell length.
pub const GL_WEIGHTS: [f64; 3] = [5.0 / 18.0, 4.0 / 9.0, 5.0 / 18.0];

/// Node offsets relative to the cell center, in units of the spacing.
pub const GL_OFFSETS: [f64; 3] = [-KAPPA, 0.0, KAPPA];

/// The per-cell rule: node `i` of cell `ℓ` sits at `ξ_ℓ + GL_OFFSETS[i]·Δξ`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct QuadratureRule;

impl QuadratureRule {
    pub fn weights(&self) -> [f64; 3] {
        GL_WEIGHTS
    }

    pub fn offsets(&self) -> [f64; 3] {
        GL_OFFSETS
    }

    /// `Σ μ_i f(node_i) · Δξ` over cell `l` of `axis`.
    pub fn integrate_cell(&self, axis: &Axis, l: usize, f: impl Fn(f64) -> f64) -> f64 {
        let c = axis.center(l);
        let h = axis.spacing();
        GL_WEIGHTS.iter().zip(GL_OFFSETS).map(|(w, o)| w * f(c + o * h)).sum::<f64>() * h
    }
}

/// The three node coordinates of cell `l`: `(ξ_ℓ − κΔξ, ξ_ℓ, ξ_ℓ + κΔξ)`.
pub fn gl_nodes(axis: &Axis, l: usize) -> Result<[f64; 3]> {
    if l >= axis.n_cells() {
        return Err(Error::Grid(format!(
            "random cell {l} out of range (axis has {} cells)",
            axis.n_cells()
        )));
    }
    let c = axis.center(l);
    let h = axis.spacing();
    Ok(GL_OFFSETS.map(|o| c + o * h))
}

/// Densities and quadrature weights at every random node of a grid.
///
/// Each random cell has `3^s` nodes, numbered `q = a·3 + b` with `a` the `ξ`
/// node and `b` the `η` node (so `q = a` for one random variable). Node 1
/// (resp. 4) is the cell center.
#[derive(Debug, Clone)]
pub struct NodeTable {
    n_nodes: usize,
    weights: Vec<f64>,
    center_density: Vec<f64>,
}

impl NodeTable {
    pub fn new(grid: &Grid, pdf: &JointPdf) -> Self {
        let two = grid.eta().is_some();
        let n_nodes = if two { 9 } else { 3 };
        let nr = grid.n_rand();
        let (dxi, deta) = (grid.dxi(), grid.deta());
        let mut weights = Vec::with_capacity(nr * n_nodes);
        let mut center_density = Vec::with_capacity(nr);
        for r in 0..nr {
            let (xc, ec) = grid.rand_center(r);
            center_density.push(pdf.eval_floored(xc, ec));
            for a in 0..3 {
                let xa = xc + GL_OFFSETS[a] * dxi;
                if two {
                    for b in 0..3 {
                        let eb = ec + GL_OFFSETS[b] * deta;
                        weights.push(GL_WEIGHTS[a] * GL_WEIGHTS[b] * pdf.eval(xa, eb));
                    }
                } else {
                    weights.push(GL_WEIGHTS[a] * pdf.eval(xa, ec));
                }
            }
        }
        Self { n_nodes, weights, center_density }
    }

    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    /// Index of the cell-center node.
    pub fn center_node(&self) -> usize {
        self.n_nodes / 2
    }

    /// `μ_a μ_b ν(node)` for all nodes of random cell `r`.
    #[inline]
    pub fn weights(&self, r: usize) -> &[f64] {
        &self.weights[r * self.n_nodes..(r + 1) * self.n_nodes]
    }

    /// Floored density at the center of random cell `r`.
    #[inline]
    pub fn center_density(&self, r: usize) -> f64 {
        self.center_density[r]
    }

    pub fn center_densities(&self) -> &[f64] {
        &self.center_density
    }
}
