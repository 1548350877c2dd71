//! Central-upwind numerical flux.

/// Below this spread of the local speeds the flux falls back to the mean of
/// the two physical fluxes.
pub const DEGENERATE_SPREAD: f64 = 1e-12;

/// Central-upwind combination of precomputed physical fluxes `fm = F(U⁻)`, `fp = F(U⁺)`:
///
/// `(a⁺F(U⁻) − a⁻F(U⁺))/(a⁺ − a⁻) + a⁺a⁻/(a⁺ − a⁻)·(U⁺ − U⁻)`.
#[inline]
pub fn cu_combine(um: &[f64], up: &[f64], fm: &[f64], fp: &[f64], am: f64, ap: f64, out: &mut [f64]) {
    let spread = ap - am;
    if spread < DEGENERATE_SPREAD {
        for k in 0..out.len() {
            out[k] = 0.5 * (fm[k] + fp[k]);
        }
        return;
    }
    let inv = 1.0 / spread;
    let prod = ap * am * inv;
    for k in 0..out.len() {
        out[k] = (ap * fm[k] - am * fp[k]) * inv + prod * (up[k] - um[k]);
    }
}

/// Central-upwind flux of two states for a physical flux function `f`.
///
/// ```
/// use stochastic_fv::solver::cu_flux;
/// // Burgers flux: the CU flux of equal states is the physical flux
/// let f = |u: &[f64]| vec![0.5 * u[0] * u[0]];
/// assert_eq!(cu_flux(&[2.0], &[2.0], -1.0, 3.0, f), vec![2.0]);
/// ```
pub fn cu_flux(um: &[f64], up: &[f64], am: f64, ap: f64, f: impl Fn(&[f64]) -> Vec<f64>) -> Vec<f64> {
    let fm = f(um);
    let fp = f(up);
    let mut out = vec![0.0; um.len()];
    cu_combine(um, up, &fm, &fp, am, ap, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::euler;
    use crate::recon::Direction;
    use proptest::prelude::*;

    fn euler_f(u: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; 3];
        euler::flux(u, Direction::X, 1.4, &mut out).unwrap();
        out
    }

    #[test]
    fn local_lax_friedrichs_form() {
        let (um, up) = ([1.0, 0.2, 2.5], [0.125, 0.0, 0.25]);
        let a = 1.7;
        let got = cu_flux(&um, &up, -a, a, euler_f);
        let (fm, fp) = (euler_f(&um), euler_f(&up));
        for k in 0..3 {
            let llf = 0.5 * (fm[k] + fp[k]) - 0.5 * a * (up[k] - um[k]);
            assert!((got[k] - llf).abs() < 1e-14);
        }
    }

    #[test]
    fn sod_interface() {
        let (um, up) = ([1.0, 0.0, 2.5], [0.125, 0.0, 0.25]);
        let (am, ap) = euler::euler_speeds(&um, &up, 1.4, Direction::X).unwrap();
        let got = cu_flux(&um, &up, am, ap, euler_f);
        let (fm, fp) = (euler_f(&um), euler_f(&up));
        for k in 0..3 {
            let direct =
                (ap * fm[k] - am * fp[k]) / (ap - am) + ap * am / (ap - am) * (up[k] - um[k]);
            assert!((got[k] - direct).abs() < 1e-15);
        }
    }

    #[test]
    fn degenerate_speeds() {
        let got = cu_flux(&[1.0, 0.0, 2.5], &[1.0, 0.0, 2.5], 0.0, 0.0, euler_f);
        assert_eq!(got, euler_f(&[1.0, 0.0, 2.5]));
    }

    proptest! {
        #[test]
        fn consistency(rho in 0.1f64..3.0, u in -2.0f64..2.0, p in 0.1f64..3.0) {
            let s = [rho, rho * u, euler::total_energy(rho, &[u], p, 1.4)];
            let (am, ap) = euler::euler_speeds(&s, &s, 1.4, Direction::X).unwrap();
            let got = cu_flux(&s, &s, am, ap, euler_f);
            let exact = euler_f(&s);
            for k in 0..3 {
                prop_assert!((got[k] - exact[k]).abs() <= 1e-13 * exact[k].abs().max(1.0));
            }
        }
    }
}
