//! Physical models: flux functions, characteristic speeds and sources.

pub mod euler;
pub mod swe;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::recon::Direction;

/// A point of physical × random space. Unused coordinates are 0.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
    pub xi: f64,
    pub eta: f64,
}

/// Which random variable a parameter depends on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RandomAxis {
    Xi,
    Eta,
}

/// Ratio of specific heats, possibly affine in one random variable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaLaw {
    pub base: f64,
    pub slope: f64,
    pub axis: RandomAxis,
}

impl GammaLaw {
    pub fn constant(gamma: f64) -> Self {
        Self { base: gamma, slope: 0.0, axis: RandomAxis::Xi }
    }

    /// `γ = base + slope·ξ` (or `η`).
    pub fn affine(base: f64, slope: f64, axis: RandomAxis) -> Self {
        Self { base, slope, axis }
    }

    #[inline]
    pub fn eval(&self, xi: f64, eta: f64) -> f64 {
        let s = match self.axis {
            RandomAxis::Xi => xi,
            RandomAxis::Eta => eta,
        };
        self.base + self.slope * s
    }
}

/// Bottom topography as a closed-form function of a point.
#[derive(Clone)]
pub struct Bottom(Arc<dyn Fn(Point) -> f64 + Send + Sync>);

impl Bottom {
    pub fn new(f: impl Fn(Point) -> f64 + Send + Sync + 'static) -> Self {
        Self(Arc::new(f))
    }

    pub fn flat(level: f64) -> Self {
        Self::new(move |_| level)
    }

    #[inline]
    pub fn eval(&self, p: Point) -> f64 {
        (self.0)(p)
    }
}

impl fmt::Debug for Bottom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Bottom(<fn>)")
    }
}

#[derive(Debug, Clone)]
pub struct EulerModel {
    pub gamma: GammaLaw,
    pub dims: usize,
}

#[derive(Debug, Clone)]
pub struct SweModel {
    pub g: f64,
    /// Desingularization length.
    pub eps: f64,
    pub bottom: Bottom,
    pub dims: usize,
}

/// A hyperbolic system together with its parameters.
#[derive(Debug, Clone)]
pub enum Model {
    Euler(EulerModel),
    ShallowWater(SweModel),
}

impl Model {
    pub fn euler(gamma: GammaLaw, dims: usize) -> Result<Self> {
        check_dims(dims)?;
        Ok(Model::Euler(EulerModel { gamma, dims }))
    }

    pub fn shallow_water(g: f64, eps: f64, bottom: Bottom, dims: usize) -> Result<Self> {
        check_dims(dims)?;
        if !(g > 0.0 && g.is_finite()) {
            return Err(Error::Config(format!("gravity g = {g} must be positive")));
        }
        if !(eps > 0.0 && eps.is_finite()) {
            return Err(Error::Config(format!("desingularization ε = {eps} must be positive")));
        }
        Ok(Model::ShallowWater(SweModel { g, eps, bottom, dims }))
    }

    pub fn dims(&self) -> usize {
        match self {
            Model::Euler(m) => m.dims,
            Model::ShallowWater(m) => m.dims,
        }
    }

    pub fn n_components(&self) -> usize {
        match self {
            Model::Euler(m) => m.dims + 2,
            Model::ShallowWater(m) => m.dims + 1,
        }
    }

    /// Length of the face state handed to [`Model::flux`] and [`Model::eigen_bounds`].
    pub fn state_width(&self) -> usize {
        match self {
            Model::Euler(_) => self.n_components(),
            Model::ShallowWater(m) => 2 * m.dims + 1,
        }
    }

    /// Component kept nonnegative by flux limiting, if any.
    pub fn draining_component(&self) -> Option<usize> {
        match self {
            Model::Euler(_) => None,
            Model::ShallowWater(_) => Some(0),
        }
    }

    pub fn component_names(&self) -> Vec<&'static str> {
        match (self, self.dims()) {
            (Model::Euler(_), 1) => vec!["rho", "rho_u", "energy"],
            (Model::Euler(_), _) => vec!["rho", "rho_u", "rho_v", "energy"],
            (Model::ShallowWater(_), 1) => vec!["h", "hu"],
            (Model::ShallowWater(_), _) => vec!["h", "hu", "hv"],
        }
    }

    /// Ratio of specific heats at a random point (1 for shallow water, unused).
    pub fn gamma_at(&self, xi: f64, eta: f64) -> f64 {
        match self {
            Model::Euler(m) => m.gamma.eval(xi, eta),
            Model::ShallowWater(_) => 1.0,
        }
    }

    /// Turns reconstructed point values into a face state.
    ///
    /// For shallow water the first entry of `raw` is the water surface `w`;
    /// the depth is recovered against the bottom value `z` and velocities
    /// are desingularized. Euler states are copied unchanged.
    #[inline]
    pub fn face_state(&self, raw: &[f64], z: f64, out: &mut [f64]) {
        match self {
            Model::Euler(_) => out[..raw.len()].copy_from_slice(raw),
            Model::ShallowWater(m) => {
                let nc = m.dims + 1;
                let h = swe::positivity_fix(raw[0], z);
                out[0] = h;
                for k in 1..nc {
                    let (u, hu) = swe::desingularize(h, raw[k], m.eps);
                    out[k] = hu;
                    out[nc + k - 1] = u;
                }
            }
        }
    }

    /// Physical flux of a face state in direction `dir`, into `out[..n_components]`.
    #[inline]
    pub fn flux(&self, state: &[f64], dir: Direction, gamma: f64, out: &mut [f64]) -> Result<()> {
        match self {
            Model::Euler(m) => euler::flux(&state[..m.dims + 2], dir, gamma, out),
            Model::ShallowWater(m) => {
                swe::flux(state, m.dims + 1, dir, m.g, out);
                Ok(())
            }
        }
    }

    /// Smallest and largest eigenvalues of the flux Jacobian at a face state.
    #[inline]
    pub fn eigen_bounds(&self, state: &[f64], dir: Direction, gamma: f64) -> Result<(f64, f64)> {
        match self {
            Model::Euler(m) => euler::eigen_bounds(&state[..m.dims + 2], dir, gamma),
            Model::ShallowWater(m) => Ok(swe::eigen_bounds(state, m.dims + 1, dir, m.g)),
        }
    }
}

fn check_dims(dims: usize) -> Result<()> {
    if dims == 1 || dims == 2 {
        Ok(())
    } else {
        Err(Error::Config(format!("models support 1 or 2 space dimensions, got {dims}")))
    }
}
