//! Fifth-order affine-invariant WENO-Z interpolation along a random axis.
//!
//! Given point values at consecutive random-cell centers, the kernels here
//! produce values at the off-center Gauss-Legendre nodes `ξ_ℓ ± κΔξ`. Cells
//! at least two cells away from both ends of the axis use the centered
//! five-point window. The first two cells use a one-sided window over cells
//! `1..=5` whose linear weights are partly negative; they are split into two
//! positive groups combined as `δ̃ω̃ − δ̂ω̂`. The last two cells reuse the
//! one-sided path on the reversed window.
//!
//! ```
//! use stochastic_fv::weno::{interp_interior, Side, WenoParams};
//!
//! // q(ξ) = ξ² sampled at offsets −2..=2 is reproduced at the nodes
//! let v = [4.0, 1.0, 0.0, 1.0, 4.0];
//! let p = WenoParams::default();
//! assert!((interp_interior(&v, Side::Plus, &p) - 0.15).abs() < 1e-14);
//! ```

pub mod tables;

use crate::error::{Error, Result};
use tables::*;

/// Regularization constants of the nonlinear weights.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WenoParams {
    pub eps1: f64,
    pub eps2: f64,
}

impl Default for WenoParams {
    fn default() -> Self {
        Self { eps1: 1e-12, eps2: 1e-40 }
    }
}

/// Which off-center node of a cell is targeted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `ξ_ℓ − κΔξ`
    Minus,
    /// `ξ_ℓ + κΔξ`
    Plus,
}

impl Side {
    #[inline]
    fn index(self) -> usize {
        match self {
            Side::Minus => 0,
            Side::Plus => 1,
        }
    }

    #[inline]
    pub fn flip(self) -> Side {
        match self {
            Side::Minus => Side::Plus,
            Side::Plus => Side::Minus,
        }
    }
}

/// `φ²` with `φ` the mean absolute deviation of the window from its mean.
#[inline]
fn scale_guard_sq(v: &[f64; 5]) -> f64 {
    let psi = (v[0] + v[1] + v[2] + v[3] + v[4]) / 5.0;
    let phi = ((v[0] - psi).abs()
        + (v[1] - psi).abs()
        + (v[2] - psi).abs()
        + (v[3] - psi).abs()
        + (v[4] - psi).abs())
        / 5.0;
    phi * phi
}

#[inline]
fn eval_parabolas(p: &Parabolas, v: &[f64; 5]) -> [f64; 3] {
    std::array::from_fn(|i| p[i][0] * v[i] + p[i][1] * v[i + 1] + p[i][2] * v[i + 2])
}

/// Smoothness indicators of the three candidates on the centered window.
#[inline]
pub fn interior_betas(v: &[f64; 5]) -> [f64; 3] {
    let s = |a: f64| a * a;
    [
        13.0 / 12.0 * s(v[0] - 2.0 * v[1] + v[2]) + 0.25 * s(v[0] - 4.0 * v[1] + 3.0 * v[2]),
        13.0 / 12.0 * s(v[1] - 2.0 * v[2] + v[3]) + 0.25 * s(v[1] - v[3]),
        13.0 / 12.0 * s(v[2] - 2.0 * v[3] + v[4]) + 0.25 * s(3.0 * v[2] - 4.0 * v[3] + v[4]),
    ]
}

/// Smoothness indicators of the one-sided candidates, measured over cell
/// `cell` (1 or 2) of the window.
///
/// Each indicator is `(13/12)(δ²)² + p'(t₀)²` for the candidate parabola `p`
/// with second difference `δ²`, evaluated at the center `t₀` of the measured
/// cell. Expanding the squares gives the usual quadratic forms in the
/// window values, but those lose all accuracy on nearly constant data.
#[inline]
pub fn boundary_betas(v: &[f64; 5], cell: usize) -> [f64; 3] {
    let t0 = (cell - 1) as f64;
    std::array::from_fn(|i| {
        let (a, b, c) = (v[i], v[i + 1], v[i + 2]);
        let second = a - 2.0 * b + c;
        let slope = 0.5 * (c - a) + second * (t0 - i as f64 - 1.0);
        13.0 / 12.0 * second * second + slope * slope
    })
}

/// Normalized WENO-Z weights `α_i/Σα` built on linear weights `d`.
#[inline]
fn z_weights(d: &[f64; 3], beta: &[f64; 3], phi_sq: f64, params: &WenoParams) -> [f64; 3] {
    let tau = (beta[2] - beta[0]).abs();
    let guard = params.eps1 * phi_sq + params.eps2;
    let alpha: [f64; 3] = std::array::from_fn(|i| {
        let r = tau / (beta[i] + guard);
        d[i] * (1.0 + r * r)
    });
    let sum = alpha[0] + alpha[1] + alpha[2];
    alpha.map(|a| a / sum)
}

/// Nonlinear weights of the centered interpolation.
pub fn interior_weights(v: &[f64; 5], side: Side, params: &WenoParams) -> [f64; 3] {
    z_weights(&INTERIOR_D[side.index()], &interior_betas(v), scale_guard_sq(v), params)
}

/// Centered interpolation of the window `ℓ−2..=ℓ+2` to the node of cell `ℓ` on `side`.
pub fn interp_interior(v: &[f64; 5], side: Side, params: &WenoParams) -> f64 {
    let w = interior_weights(v, side, params);
    let p = eval_parabolas(&INTERIOR_P[side.index()], v);
    w[0] * p[0] + w[1] * p[1] + w[2] * p[2]
}

/// Combined one-sided weights `δ̃ω̃_i − δ̂ω̂_i` for given indicators.
pub fn boundary_weights_from_betas(
    beta: &[f64; 3],
    phi_sq: f64,
    cell: usize,
    side: Side,
    params: &WenoParams,
) -> [f64; 3] {
    let (c, s) = (cell - 1, side.index());
    let dt = BOUNDARY_DELTA_TILDE[c][s];
    let dh = BOUNDARY_DELTA_HAT[c][s];
    let wt = z_weights(&BOUNDARY_D_TILDE[c][s], beta, phi_sq, params);
    if dh == 0.0 {
        return wt.map(|w| dt * w);
    }
    let wh = z_weights(&BOUNDARY_D_HAT[c][s], beta, phi_sq, params);
    std::array::from_fn(|i| dt * wt[i] - dh * wh[i])
}

/// Combined one-sided weights for the window of cells `1..=5`.
pub fn boundary_weights(v: &[f64; 5], cell: usize, side: Side, params: &WenoParams) -> [f64; 3] {
    boundary_weights_from_betas(&boundary_betas(v, cell), scale_guard_sq(v), cell, side, params)
}

/// Values of the three one-sided candidate parabolas at the target node.
pub fn boundary_parabolas(v: &[f64; 5], cell: usize, side: Side) -> [f64; 3] {
    eval_parabolas(&BOUNDARY_P[cell - 1][side.index()], v)
}

/// One-sided interpolation from cells `1..=5` to the node of cell `cell ∈ {1, 2}` on `side`.
pub fn interp_boundary(v: &[f64; 5], cell: usize, side: Side, params: &WenoParams) -> f64 {
    assert!(cell == 1 || cell == 2, "one-sided targets are cells 1 and 2");
    let w = boundary_weights(v, cell, side, params);
    let p = boundary_parabolas(v, cell, side);
    w[0] * p[0] + w[1] * p[1] + w[2] * p[2]
}

/// Interpolates one random line of point values to its nodes.
///
/// `out[ℓ]` receives the values at `(ξ_ℓ − κΔξ, ξ_ℓ, ξ_ℓ + κΔξ)`; the center
/// entry is the input value itself. A line of a single cell is constant.
pub fn interp_line(values: &[f64], out: &mut [[f64; 3]], params: &WenoParams) -> Result<()> {
    let n = values.len();
    assert_eq!(out.len(), n, "output length must match the line");
    check_line_len(n)?;
    if n == 1 {
        out[0] = [values[0]; 3];
        return Ok(());
    }
    let low: [f64; 5] = std::array::from_fn(|k| values[k]);
    let high: [f64; 5] = std::array::from_fn(|k| values[n - 1 - k]);
    for (l, o) in out.iter_mut().enumerate() {
        let centre = values[l];
        *o = if l < 2 {
            [
                interp_boundary(&low, l + 1, Side::Minus, params),
                centre,
                interp_boundary(&low, l + 1, Side::Plus, params),
            ]
        } else if l + 2 >= n {
            let cell = n - l;
            [
                interp_boundary(&high, cell, Side::Plus, params),
                centre,
                interp_boundary(&high, cell, Side::Minus, params),
            ]
        } else {
            let v: [f64; 5] = std::array::from_fn(|k| values[l - 2 + k]);
            [interp_interior(&v, Side::Minus, params), centre, interp_interior(&v, Side::Plus, params)]
        };
    }
    Ok(())
}

/// Rejects random axes on which the interpolation is undefined.
pub fn check_line_len(n: usize) -> Result<()> {
    if (2..5).contains(&n) {
        return Err(Error::Grid(format!(
            "random axes need 1 cell or at least 5 cells for the interpolation, got {n}"
        )));
    }
    if n == 0 {
        return Err(Error::Grid("empty random axis".into()));
    }
    Ok(())
}

/// Reusable buffers for [`interp_plane`].
#[derive(Debug, Default, Clone)]
pub struct PlaneScratch {
    line: Vec<f64>,
    nodes: Vec<[f64; 3]>,
    stage: Vec<[f64; 3]>,
}

/// Interpolates a plane of point values over the random cells to every node.
///
/// `values[l·n_eta + m]` holds the value at the center of random cell
/// `(l, m)`. On return `out[(l·n_eta + m)·N + q]` holds the value at node
/// `q` of that cell, where `N = 3` for one random variable (`q = a`) and
/// `N = 9` for two (`q = a·3 + b`). With two random variables the `ξ`
/// direction is interpolated first and the `η` direction is then applied to
/// each resulting line, including the off-center `ξ` lines.
pub fn interp_plane(
    values: &[f64],
    n_xi: usize,
    n_eta: Option<usize>,
    params: &WenoParams,
    out: &mut [f64],
    scratch: &mut PlaneScratch,
) -> Result<()> {
    match n_eta {
        None => {
            assert_eq!(values.len(), n_xi);
            assert_eq!(out.len(), 3 * n_xi);
            scratch.nodes.resize(n_xi, [0.0; 3]);
            interp_line(values, &mut scratch.nodes, params)?;
            for (o, n) in out.chunks_exact_mut(3).zip(&scratch.nodes) {
                o.copy_from_slice(n);
            }
            Ok(())
        }
        Some(ne) => {
            assert_eq!(values.len(), n_xi * ne);
            assert_eq!(out.len(), 9 * n_xi * ne);
            check_line_len(ne)?;
            // stage[l·ne + m][a]: value at (ξ node a of cell l, η center of cell m)
            scratch.stage.resize(n_xi * ne, [0.0; 3]);
            scratch.line.resize(n_xi.max(ne), 0.0);
            scratch.nodes.resize(n_xi.max(ne), [0.0; 3]);
            for m in 0..ne {
                for l in 0..n_xi {
                    scratch.line[l] = values[l * ne + m];
                }
                interp_line(&scratch.line[..n_xi], &mut scratch.nodes[..n_xi], params)?;
                for l in 0..n_xi {
                    scratch.stage[l * ne + m] = scratch.nodes[l];
                }
            }
            for l in 0..n_xi {
                for a in 0..3 {
                    for m in 0..ne {
                        scratch.line[m] = scratch.stage[l * ne + m][a];
                    }
                    interp_line(&scratch.line[..ne], &mut scratch.nodes[..ne], params)?;
                    for m in 0..ne {
                        let base = (l * ne + m) * 9 + a * 3;
                        out[base..base + 3].copy_from_slice(&scratch.nodes[m]);
                    }
                }
            }
            Ok(())
        }
    }
}
