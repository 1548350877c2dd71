//! Flux limiting that keeps a nonnegative component nonnegative.

use super::assemble::RhsBuffer;
use super::discretization::Discretization;
use crate::error::{Error, Result};

/// Outcome of clamping round-off negatives after a limited update.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct SnapReport {
    /// Number of averages raised from a tiny negative value to zero.
    pub snapped: usize,
    /// Most negative value that was snapped (0 if none).
    pub worst: f64,
    /// Smallest value left in the component after snapping.
    pub min_after: f64,
}

/// Time step at which the outflow of a cell empties it:
/// `ū / Σ_d (outflow_d / Δ_d)`, written as `ū·ΠΔ / Σ_d outflow_d·Π_{e≠d}Δ_e`.
/// Infinite when nothing flows out.
///
/// ```
/// use stochastic_fv::solver::drain_time;
/// assert_eq!(drain_time(0.01, &[(0.02, 0.1)]), 0.05);
/// assert_eq!(drain_time(0.01, &[(0.0, 0.1)]), f64::INFINITY);
/// ```
pub fn drain_time(average: f64, outflows: &[(f64, f64)]) -> f64 {
    let volume: f64 = outflows.iter().map(|(_, h)| h).product();
    let mut denom = 0.0;
    for (d, (f, _)) in outflows.iter().enumerate() {
        let others: f64 =
            outflows.iter().enumerate().filter(|(e, _)| *e != d).map(|(_, (_, h))| h).product();
        denom += f * others;
    }
    if denom > 0.0 {
        volume * average / denom
    } else {
        f64::INFINITY
    }
}

/// Scales the component-`comp` fluxes in `buf` so that a forward Euler step
/// of size `dt` from `values` cannot drive that component negative.
///
/// Each face is limited by the drain time of its upwind cell; faces whose
/// upwind side is a free-boundary ghost are left alone.
pub fn draining_limit(
    disc: &Discretization,
    values: &[f64],
    buf: &mut RhsBuffer,
    dt: f64,
    comp: usize,
) {
    let grid = &disc.grid;
    let nc = disc.n_components();
    let nr = grid.n_rand();
    let ny = grid.ny();
    let n = grid.n_phys() * nr;
    let mut drain = vec![f64::INFINITY; n];
    let mut outflows = Vec::with_capacity(2);
    for p in 0..grid.n_phys() {
        let (ix, iy) = (p / ny, p % ny);
        for r in 0..nr {
            outflows.clear();
            for d in &buf.dirs {
                let (j, line) = match d.dir {
                    crate::recon::Direction::X => (ix, iy),
                    crate::recon::Direction::Y => (iy, ix),
                };
                let lo = (d.layout.face_id(j, line) * nr + r) * nc + comp;
                let hi = (d.layout.face_id(j + 1, line) * nr + r) * nc + comp;
                let out = d.flux[hi].max(0.0) + (-d.flux[lo]).max(0.0);
                outflows.push((out, d.layout.spacing(grid)));
            }
            drain[p * nr + r] = drain_time(values[(p * nr + r) * nc + comp], &outflows);
        }
    }
    for d in &mut buf.dirs {
        let bc = disc.scheme.bc(d.dir);
        for f in 0..d.layout.n_faces() {
            let (pl, pr) = d.layout.neighbours(f, bc);
            for r in 0..nr {
                let k = (f * nr + r) * nc + comp;
                let flux = d.flux[k];
                let upwind = if flux > 0.0 {
                    (!d.layout.is_ghost_side(f, bc, true)).then_some(pl)
                } else if flux < 0.0 {
                    (!d.layout.is_ghost_side(f, bc, false)).then_some(pr)
                } else {
                    None
                };
                if let Some(p) = upwind {
                    let t = drain[p * nr + r];
                    if t < dt {
                        d.flux[k] = t / dt * flux;
                    }
                }
            }
        }
    }
}

/// Sets round-off negatives of component `comp` to zero.
///
/// Values below `−tol·max(1, max |ū|)` are reported as an error instead.
pub fn snap_negatives(values: &mut [f64], nc: usize, comp: usize, tol: f64) -> Result<SnapReport> {
    let scale = values.iter().skip(comp).step_by(nc).fold(1.0_f64, |m, v| m.max(v.abs()));
    let limit = -tol * scale;
    let mut rep = SnapReport { min_after: f64::INFINITY, ..Default::default() };
    for (i, v) in values.iter_mut().enumerate().skip(comp).step_by(nc) {
        if *v < 0.0 {
            if *v < limit {
                return Err(Error::Inadmissible {
                    location: format!("cell {}", i / nc),
                    detail: format!("component {comp} fell to {v:e}"),
                });
            }
            rep.snapped += 1;
            rep.worst = rep.worst.min(*v);
            *v = 0.0;
        }
        rep.min_after = rep.min_after.min(*v);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn drain_time_two_directions() {
        // ΔxΔy ū / (fΔy + gΔx)
        let t = drain_time(0.5, &[(1.0, 0.1), (2.0, 0.2)]);
        assert!((t - 0.1 * 0.2 * 0.5 / (1.0 * 0.2 + 2.0 * 0.1)).abs() < 1e-16);
    }

    #[test]
    fn empty_cell_with_outflow_cannot_drain() {
        assert_eq!(drain_time(0.0, &[(0.3, 0.1)]), 0.0);
    }

    #[test]
    fn snapping() {
        let mut v = vec![1.0, 5.0, -1e-16, 3.0, 0.5, 1.0];
        let rep = snap_negatives(&mut v, 2, 0, 1e-12).unwrap();
        assert_eq!(rep.snapped, 1);
        assert_eq!(v[2], 0.0);
        let mut v = vec![1.0, -0.1];
        assert!(snap_negatives(&mut v, 1, 0, 1e-12).is_err());
    }
}
