//! Three-stage, third-order strong-stability-preserving Runge–Kutta step.

use crate::error::Result;

/// One Shu–Osher SSP-RK3 step of size `dt`.
///
/// `rhs(stage, u)` returns `L(u)` for stage 0, 1, 2; `post` is applied to
/// each forward-Euler substep `u + dt·L(u)` before it enters the convex
/// combination.
///
/// ```
/// use stochastic_fv::solver::ssprk3_step;
/// // u' = 1 is integrated exactly
/// let u = ssprk3_step(&[2.0], 0.5, |_, _| Ok(vec![1.0]), |_| Ok(())).unwrap();
/// assert_eq!(u, vec![2.5]);
/// ```
pub fn ssprk3_step(
    u: &[f64],
    dt: f64,
    mut rhs: impl FnMut(usize, &[f64]) -> Result<Vec<f64>>,
    mut post: impl FnMut(&mut [f64]) -> Result<()>,
) -> Result<Vec<f64>> {
    let mut euler = |stage: usize, v: &[f64]| -> Result<Vec<f64>> {
        let l = rhs(stage, v)?;
        let mut out: Vec<f64> = v.iter().zip(&l).map(|(a, b)| a + dt * b).collect();
        post(&mut out)?;
        Ok(out)
    };
    let u1 = euler(0, u)?;
    let e1 = euler(1, &u1)?;
    let u2: Vec<f64> = u.iter().zip(&e1).map(|(a, b)| 0.75 * a + 0.25 * b).collect();
    let e2 = euler(2, &u2)?;
    Ok(u.iter().zip(&e2).map(|(a, b)| a / 3.0 + 2.0 / 3.0 * b).collect())
}
