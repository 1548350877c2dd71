//! Three-grid error and rate estimates on nested meshes.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::grid::{Field, Grid};
use crate::models::Model;
use crate::solver::{run, Discretization};

use super::config::Settings;
use super::presets::build;

/// Error and rate of one quantity on one triple of meshes.
#[derive(Debug, Clone, PartialEq)]
pub struct RungeEstimate {
    /// `‖fine − middle‖`.
    pub delta_fine: f64,
    /// `‖middle − coarse‖`.
    pub delta_coarse: f64,
    /// `δ₁₂² / |δ₁₂ − δ₂₄|`; `None` when the differences coincide.
    pub error: Option<f64>,
    /// `log₂(δ₂₄ / δ₁₂)`; `None` when it is undefined.
    pub rate: Option<f64>,
    /// Both differences vanish: the three solutions agree exactly.
    pub exact_match: bool,
}

/// Runge-formula estimate from two successive differences.
///
/// ```
/// use stochastic_fv::io::runge;
/// let e = runge(1.0 / 32.0, 1.0);
/// assert!((e.rate.unwrap() - 5.0).abs() < 1e-12);
/// assert!(runge(0.0, 0.0).exact_match);
/// ```
pub fn runge(delta_fine: f64, delta_coarse: f64) -> RungeEstimate {
    let exact_match = delta_fine == 0.0 && delta_coarse == 0.0;
    let gap = (delta_fine - delta_coarse).abs();
    let error = (gap > 0.0).then(|| delta_fine * delta_fine / gap);
    let rate = (delta_fine > 0.0 && delta_coarse > 0.0).then(|| (delta_coarse / delta_fine).log2());
    RungeEstimate { delta_fine, delta_coarse, error, rate, exact_match }
}

/// One row of a convergence table.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    /// Random cells of the finest mesh of the triple.
    pub nxi: usize,
    pub nx: usize,
    pub quantity: String,
    pub estimate: RungeEstimate,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceTable {
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceTable {
    pub fn get(&self, nxi: usize, quantity: &str) -> Option<&RungeEstimate> {
        self.rows.iter().find(|r| r.nxi == nxi && r.quantity == quantity).map(|r| &r.estimate)
    }

    pub fn to_text(&self) -> String {
        let fmt = |v: Option<f64>| v.map_or_else(|| "n/a".to_string(), |v| format!("{v:.6e}"));
        let mut s = String::from("nxi,nx,quantity,delta_fine,delta_coarse,error,rate,exact\n");
        for r in &self.rows {
            let e = &r.estimate;
            let _ = writeln!(
                s,
                "{},{},{},{:.6e},{:.6e},{},{},{}",
                r.nxi,
                r.nx,
                r.quantity,
                e.delta_fine,
                e.delta_coarse,
                fmt(e.error),
                e.rate.map_or_else(|| "n/a".to_string(), |v| format!("{v:.4}")),
                e.exact_match
            );
        }
        s
    }
}

/// Weighted averages to compare: every component, plus `w̄ = h̄ + Z̄` for
/// shallow water. Laid out `[quantity][p·n_rand + r]`.
fn compared_averages(disc: &Discretization, field: &Field) -> (Vec<String>, Vec<Vec<f64>>) {
    let nc = field.n_components();
    let mut names: Vec<String> =
        disc.model.component_names().iter().map(|s| s.to_string()).collect();
    let mut data: Vec<Vec<f64>> =
        (0..nc).map(|c| field.values().iter().skip(c).step_by(nc).copied().collect()).collect();
    if let Model::ShallowWater(_) = disc.model {
        names.push("w".into());
        data.push(data[0].iter().zip(disc.zbar()).map(|(h, z)| h + z).collect());
    }
    (names, data)
}

/// Averages fine-grid cell values onto a coarser nested grid.
pub fn restrict(values: &[f64], fine: &Grid, coarse: &Grid) -> Result<Vec<f64>> {
    let ratio = |f: usize, c: usize| -> Result<usize> {
        if c == 0 || f % c != 0 {
            return Err(Error::Config(format!("meshes of {f} and {c} cells are not nested")));
        }
        Ok(f / c)
    };
    if fine.layout() != coarse.layout() {
        return Err(Error::Config("meshes of a study must share a layout".into()));
    }
    let (rx, ry) = (ratio(fine.nx(), coarse.nx())?, ratio(fine.ny(), coarse.ny())?);
    let (rl, rm) = (ratio(fine.n_xi(), coarse.n_xi())?, ratio(fine.n_eta(), coarse.n_eta())?);
    let count = (rx * ry * rl * rm) as f64;
    let mut out = vec![0.0; coarse.n_phys() * coarse.n_rand()];
    for p in 0..fine.n_phys() {
        let (ix, iy) = (p / fine.ny(), p % fine.ny());
        let pc = coarse.phys_index(ix / rx, iy / ry);
        for r in 0..fine.n_rand() {
            let (l, m) = (r / fine.n_eta(), r % fine.n_eta());
            let rc = coarse.rand_index(l / rl, m / rm);
            out[pc * coarse.n_rand() + rc] += values[p * fine.n_rand() + r] / count;
        }
    }
    Ok(out)
}

/// Runs the preset of `settings` on every mesh pair of `converge_nxi` /
/// `converge_nx` and applies the Runge formulae to each consecutive triple.
///
/// Solutions are compared as weighted cell averages restricted to the
/// coarsest mesh, in the discrete L¹ norm of that mesh.
pub fn convergence_study(settings: &Settings) -> Result<ConvergenceTable> {
    let (nxis, nxs) = (&settings.converge_nxi, &settings.converge_nx);
    if nxis.len() != nxs.len() || nxis.len() < 3 {
        return Err(Error::Config(
            "a convergence study needs at least three matching entries in converge_nxi and converge_nx"
                .into(),
        ));
    }
    for k in 1..nxis.len() {
        if nxis[k] % nxis[k - 1] != 0 || nxs[k] % nxs[k - 1] != 0 || nxis[k] <= nxis[k - 1] {
            return Err(Error::Config(format!(
                "meshes {}x{} and {}x{} are not nested refinements",
                nxs[k - 1],
                nxis[k - 1],
                nxs[k],
                nxis[k]
            )));
        }
    }
    let mut grids = Vec::new();
    let mut data = Vec::new();
    let mut names = Vec::new();
    for (&nxi, &nx) in nxis.iter().zip(nxs) {
        let mut s = settings.clone();
        s.nxi = nxi;
        s.nx = nx;
        s.output_times.clear();
        let problem = build(&s)?;
        let disc = problem.discretization()?;
        let initial = problem.initial_field(&disc)?;
        let report = run(disc.clone(), initial, &problem.solver)?;
        let field = &report.snapshots.last().expect("final snapshot").field;
        let (n, d) = compared_averages(&disc, field);
        names = n;
        grids.push(disc.grid.clone());
        data.push(d);
    }
    let coarsest = grids[0].clone();
    let vol = coarsest.cell_volume();
    let restricted: Vec<Vec<Vec<f64>>> = grids
        .iter()
        .zip(&data)
        .map(|(g, d)| d.iter().map(|q| restrict(q, g, &coarsest)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let l1 = |a: &[f64], b: &[f64]| -> f64 { a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum::<f64>() * vol };
    let mut rows = Vec::new();
    for i in 2..grids.len() {
        for (k, name) in names.iter().enumerate() {
            let d12 = l1(&restricted[i][k], &restricted[i - 1][k]);
            let d24 = l1(&restricted[i - 1][k], &restricted[i - 2][k]);
            rows.push(ConvergenceRow {
                nxi: nxis[i],
                nx: nxs[i],
                quantity: name.clone(),
                estimate: runge(d12, d24),
            });
        }
    }
    Ok(ConvergenceTable { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Axis;

    #[test]
    fn restriction_averages_children() {
        let fine = Grid::d1s1(Axis::new(0.0, 1.0, 4).unwrap(), Axis::new(-1.0, 1.0, 6).unwrap());
        let coarse = Grid::d1s1(Axis::new(0.0, 1.0, 2).unwrap(), Axis::new(-1.0, 1.0, 3).unwrap());
        let v: Vec<f64> = (0..24).map(|i| i as f64).collect();
        let r = restrict(&v, &fine, &coarse).unwrap();
        // coarse cell (0, 0) gathers fine (0..2) × (0..2)
        assert_eq!(r[0], (0.0 + 1.0 + 6.0 + 7.0) / 4.0);
        let total_f: f64 = v.iter().sum::<f64>() * fine.cell_volume();
        let total_c: f64 = r.iter().sum::<f64>() * coarse.cell_volume();
        assert!((total_f - total_c).abs() < 1e-12);
        let odd = Grid::d1s1(Axis::new(0.0, 1.0, 3).unwrap(), Axis::new(-1.0, 1.0, 3).unwrap());
        assert!(restrict(&v, &fine, &odd).is_err());
    }

    #[test]
    fn runge_guards() {
        let e = runge(0.0, 0.0);
        assert!(e.exact_match && e.rate.is_none() && e.error.is_none());
        let e = runge(0.5, 0.5);
        assert!(e.error.is_none());
        assert_eq!(e.rate, Some(0.0));
    }
}
