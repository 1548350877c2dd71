//! Saint-Venant shallow-water equations over a bottom topography.
//!
//! Conserved states are `(h, hu)` in 1-D and `(h, hu, hv)` in 2-D. Faces
//! carry an extended state `(h, hu[, hv], u[, v])` holding the velocities
//! produced by desingularization, so fluxes never divide by the depth.

use crate::recon::Direction;

/// Desingularized velocity `2h·m/(h² + max(h, ε)²)` and the matching momentum `h·u`.
///
/// ```
/// use stochastic_fv::models::swe::desingularize;
/// let (u, m) = desingularize(5e-7, 1e-6, 1e-6);
/// assert!((u - 0.8).abs() < 1e-12 && (m - 4e-7).abs() < 1e-18);
/// ```
#[inline]
pub fn desingularize(h: f64, momentum: f64, eps: f64) -> (f64, f64) {
    let d = h.max(eps);
    let u = 2.0 * h * momentum / (h * h + d * d);
    (u, h * u)
}

/// Nonnegative depth from a water-surface value: `max(w, Z) − Z`.
#[inline]
pub fn positivity_fix(w: f64, z: f64) -> f64 {
    w.max(z) - z
}

/// Flux in direction `dir` of an extended face state, written to `out[..nc]`.
#[inline]
pub fn flux(state: &[f64], nc: usize, dir: Direction, g: f64, out: &mut [f64]) {
    let h = state[0];
    let k = match dir {
        Direction::X => 1,
        Direction::Y => 2,
    };
    let un = state[nc + k - 1];
    out[0] = state[k];
    for j in 1..nc {
        out[j] = state[j] * un;
    }
    out[k] += 0.5 * g * h * h;
}

/// Smallest and largest eigenvalues `u_n ∓ √(gh)` of an extended face state.
#[inline]
pub fn eigen_bounds(state: &[f64], nc: usize, dir: Direction, g: f64) -> (f64, f64) {
    let k = match dir {
        Direction::X => 1,
        Direction::Y => 2,
    };
    let un = state[nc + k - 1];
    let c = (g * state[0].max(0.0)).sqrt();
    (un - c, un + c)
}

/// 1-D flux `(hu, hu² + g h²/2)` of a conserved state, desingularizing the velocity.
pub fn swe1d_flux(state: [f64; 2], g: f64, eps: f64) -> [f64; 2] {
    let (u, m) = desingularize(state[0], state[1], eps);
    let mut out = [0.0; 2];
    flux(&[state[0], m, u], 2, Direction::X, g, &mut out);
    out
}

/// One-sided local speeds `(a⁻, a⁺)` of two conserved 1-D states.
pub fn swe_speeds(minus: [f64; 2], plus: [f64; 2], g: f64, eps: f64) -> (f64, f64) {
    let ext = |s: [f64; 2]| {
        let (u, m) = desingularize(s[0], s[1], eps);
        [s[0], m, u]
    };
    let (l1, n1) = eigen_bounds(&ext(minus), 2, Direction::X, g);
    let (l2, n2) = eigen_bounds(&ext(plus), 2, Direction::X, g);
    (l1.min(l2).min(0.0), n1.max(n2).max(0.0))
}

/// Well-balanced source quadrature at one node: `−(g/2)(h⁺_L + h⁻_R)(Z_R − Z_L)`.
///
/// `h_left` is the depth just inside the cell at its low face, `h_right` just
/// inside at its high face; `z_left`, `z_right` are the bottom there.
#[inline]
pub fn swe_wb_source(h_left: f64, h_right: f64, z_left: f64, z_right: f64, g: f64) -> f64 {
    -0.5 * g * (h_left + h_right) * (z_right - z_left)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn flux_values() {
        assert_eq!(swe1d_flux([1.0, 0.0], 1.0, 1e-6), [0.0, 0.5]);
        assert_eq!(swe1d_flux([0.0, 0.0], 1.0, 1e-6), [0.0, 0.0]);
        let f = swe1d_flux([2.0, 1.0], 2.0, 1e-6);
        assert!((f[0] - 1.0).abs() < 1e-15 && (f[1] - 4.5).abs() < 1e-15);
    }

    #[test]
    fn speed_values() {
        assert_eq!(swe_speeds([1.0, 0.0], [1.0, 0.0], 1.0, 1e-6), (-1.0, 1.0));
        assert_eq!(swe_speeds([0.0, 0.0], [0.0, 0.0], 1.0, 1e-6), (0.0, 0.0));
        assert_eq!(swe_speeds([1.0, 0.0], [4.0, 0.0], 1.0, 1e-6), (-2.0, 2.0));
    }

    #[test]
    fn desingularization() {
        assert_eq!(desingularize(1.0, 2.0, 1e-6), (2.0, 2.0));
        assert_eq!(desingularize(0.0, 5.0, 1e-6), (0.0, 0.0));
        let (u, m) = desingularize(5e-7, 1e-6, 1e-6);
        assert!((u - 0.8).abs() < 1e-12);
        assert!((m - 4e-7).abs() < 1e-18);
    }

    #[test]
    fn positivity() {
        assert_eq!(positivity_fix(0.5, 1.0), 0.0);
        assert_eq!(positivity_fix(2.0, 1.0), 1.0);
        assert_eq!(positivity_fix(-0.1, 0.0), 0.0);
    }

    #[test]
    fn source_values() {
        assert_eq!(swe_wb_source(1.0, 1.0, 0.3, 0.3, 9.81), 0.0);
        assert_eq!(swe_wb_source(1.0, 3.0, 0.0, 0.5, 1.0), -1.0);
    }

    proptest! {
        #[test]
        fn positivity_is_nonnegative(w in -10.0f64..10.0, z in -10.0f64..10.0) {
            prop_assert!(positivity_fix(w, z) >= 0.0);
        }

        #[test]
        fn desingularized_velocity_is_bounded(h in 0.0f64..2.0, m in -5.0f64..5.0, eps in 1e-8f64..1e-2) {
            let (u, _) = desingularize(h, m, eps);
            prop_assert!(u.abs() <= 2.0 * m.abs() / h.max(eps) * (1.0 + 1e-15));
        }

        #[test]
        fn lake_at_rest_balances(
            w in -1.0f64..3.0, zl in -2.0f64..2.0, zr in -2.0f64..2.0, g in 0.5f64..10.0,
        ) {
            // a cell with faces at bottoms zl, zr: momentum flux difference plus source vanishes
            let hl = positivity_fix(w, zl);
            let hr = positivity_fix(w, zr);
            prop_assume!(hl > 0.0 && hr > 0.0);
            let fl = swe1d_flux([hl, 0.0], g, 1e-6)[1];
            let fr = swe1d_flux([hr, 0.0], g, 1e-6)[1];
            let s = swe_wb_source(hl, hr, zl, zr, g);
            let scale = fl.abs().max(fr.abs()).max(1e-300);
            prop_assert!((fr - fl - s).abs() <= 1e-13 * scale);
        }
    }
}
