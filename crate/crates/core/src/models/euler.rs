//! Ideal-gas Euler equations in one and two space dimensions.
//!
//! State vectors are `(ρ, ρu, E)` in 1-D and `(ρ, ρu, ρv, E)` in 2-D.

use crate::error::{Error, Result};
use crate::recon::Direction;

/// Pressure from the ideal-gas equation of state, `(γ−1)(E − ρ|u|²/2)`.
#[inline]
pub fn pressure(state: &[f64], gamma: f64) -> f64 {
    let rho = state[0];
    let last = state.len() - 1;
    let kinetic: f64 = state[1..last].iter().map(|m| m * m).sum::<f64>() / rho;
    (gamma - 1.0) * (state[last] - 0.5 * kinetic)
}

/// Total energy of a primitive state `(ρ, velocity, p)`.
pub fn total_energy(rho: f64, velocity: &[f64], p: f64, gamma: f64) -> f64 {
    let v2: f64 = velocity.iter().map(|v| v * v).sum();
    p / (gamma - 1.0) + 0.5 * rho * v2
}

fn admissible(state: &[f64], gamma: f64) -> Result<f64> {
    let rho = state[0];
    if !(rho > 0.0) {
        return Err(Error::Inadmissible {
            location: String::new(),
            detail: format!("density {rho} is not positive"),
        });
    }
    let p = pressure(state, gamma);
    if !(p >= 0.0) {
        return Err(Error::Inadmissible {
            location: String::new(),
            detail: format!("pressure {p} is negative"),
        });
    }
    Ok(p)
}

/// Flux in direction `dir`, written to `out[..state.len()]`.
pub fn flux(state: &[f64], dir: Direction, gamma: f64, out: &mut [f64]) -> Result<()> {
    let p = admissible(state, gamma)?;
    let n = state.len();
    let k = match dir {
        Direction::X => 1,
        Direction::Y => 2,
    };
    debug_assert!(k < n - 1, "y-flux needs a 2-D state");
    let rho = state[0];
    let un = state[k] / rho;
    let e = state[n - 1];
    out[0] = state[k];
    for j in 1..n - 1 {
        out[j] = state[j] * un;
    }
    out[k] += p;
    out[n - 1] = un * (e + p);
    Ok(())
}

/// Smallest and largest characteristic speeds `u_n ∓ c` in direction `dir`.
pub fn eigen_bounds(state: &[f64], dir: Direction, gamma: f64) -> Result<(f64, f64)> {
    let p = admissible(state, gamma)?;
    let k = match dir {
        Direction::X => 1,
        Direction::Y => 2,
    };
    let un = state[k] / state[0];
    let c = (gamma * p / state[0]).sqrt();
    Ok((un - c, un + c))
}

/// 1-D flux `(ρu, ρu² + p, u(E + p))`.
pub fn euler1d_flux(state: [f64; 3], gamma: f64) -> Result<[f64; 3]> {
    let mut out = [0.0; 3];
    flux(&state, Direction::X, gamma, &mut out)?;
    Ok(out)
}

/// Both 2-D fluxes `(F, G)`.
pub fn euler2d_fluxes(state: [f64; 4], gamma: f64) -> Result<([f64; 4], [f64; 4])> {
    let mut f = [0.0; 4];
    let mut g = [0.0; 4];
    flux(&state, Direction::X, gamma, &mut f)?;
    flux(&state, Direction::Y, gamma, &mut g)?;
    Ok((f, g))
}

/// One-sided local speeds `(a⁻, a⁺)` from the states on both sides of a face.
pub fn euler_speeds(minus: &[f64], plus: &[f64], gamma: f64, dir: Direction) -> Result<(f64, f64)> {
    let (l1, n1) = eigen_bounds(minus, dir, gamma)?;
    let (l2, n2) = eigen_bounds(plus, dir, gamma)?;
    Ok((l1.min(l2).min(0.0), n1.max(n2).max(0.0)))
}
