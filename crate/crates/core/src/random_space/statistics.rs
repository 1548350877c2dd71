//! Mean, standard deviation and quantiles over the random variables.
//!
//! Point values are recovered at random-cell centers as `U = Ū/ν(ξ_ℓ)` and
//! integrated with the midpoint rule, each center carrying the weight
//! `ν(ξ_ℓ)Δξ` (times `Δη` for two random variables). Quantiles come from the
//! weighted empirical distribution of those point values, with the weights
//! renormalized to unit mass.

use crate::error::{Error, Result};
use crate::grid::{Field, Grid};
use crate::random_space::pdf::JointPdf;

/// Statistics of one scalar quantity, one entry per physical cell.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantityStats {
    pub name: String,
    pub mean: Vec<f64>,
    pub std: Vec<f64>,
    /// `quantiles[k][p]` is the quantile at level `k` in physical cell `p`.
    pub quantiles: Vec<Vec<f64>>,
}

/// Statistics of several quantities sharing a grid and a set of levels.
#[derive(Debug, Clone, PartialEq)]
pub struct StatisticsResult {
    pub levels: Vec<f64>,
    pub quantities: Vec<QuantityStats>,
}

impl StatisticsResult {
    pub fn get(&self, name: &str) -> Option<&QuantityStats> {
        self.quantities.iter().find(|q| q.name == name)
    }
}

fn check_levels(levels: &[f64]) -> Result<()> {
    for &l in levels {
        if !(0.0..=1.0).contains(&l) {
            return Err(Error::Config(format!("quantile level {l} is outside [0, 1]")));
        }
    }
    Ok(())
}

/// Midpoint weights `ν(center)·Δξ(·Δη)` of every random cell.
pub fn center_weights(grid: &Grid, pdf: &JointPdf) -> Vec<f64> {
    let vol = grid.rand_volume();
    (0..grid.n_rand())
        .map(|r| {
            let (x, e) = grid.rand_center(r);
            pdf.eval(x, e) * vol
        })
        .collect()
}

/// Statistics of point values laid out as `values[p·n_rand + r]`.
pub fn point_statistics(
    name: &str,
    grid: &Grid,
    pdf: &JointPdf,
    values: &[f64],
    levels: &[f64],
) -> Result<QuantityStats> {
    check_levels(levels)?;
    let nr = grid.n_rand();
    let np = grid.n_phys();
    if values.len() != np * nr {
        return Err(Error::Grid(format!(
            "expected {} point values, got {}",
            np * nr,
            values.len()
        )));
    }
    let w = center_weights(grid, pdf);
    let total: f64 = w.iter().sum();
    let mut order: Vec<usize> = (0..nr).collect();
    let mut out = QuantityStats {
        name: name.to_string(),
        mean: Vec::with_capacity(np),
        std: Vec::with_capacity(np),
        quantiles: vec![Vec::with_capacity(np); levels.len()],
    };
    for p in 0..np {
        let u = &values[p * nr..(p + 1) * nr];
        let mean: f64 = u.iter().zip(&w).map(|(u, w)| u * w).sum();
        let var: f64 = u.iter().zip(&w).map(|(u, w)| (u - mean) * (u - mean) * w).sum();
        out.mean.push(mean);
        out.std.push(var.max(0.0).sqrt());
        if levels.is_empty() {
            continue;
        }
        order.sort_by(|&a, &b| u[a].total_cmp(&u[b]).then(a.cmp(&b)));
        for (k, &level) in levels.iter().enumerate() {
            out.quantiles[k].push(weighted_quantile(u, &w, total, &order, level));
        }
    }
    Ok(out)
}

fn weighted_quantile(u: &[f64], w: &[f64], total: f64, order: &[usize], level: f64) -> f64 {
    if total <= 0.0 {
        return u[order[order.len() / 2]];
    }
    let mut cum = 0.0;
    for &i in order {
        cum += w[i] / total;
        if cum >= level - 1e-12 {
            return u[i];
        }
    }
    u[*order.last().expect("at least one random cell")]
}

/// Point values `Ū/ν(center)` of component `c`, laid out as `[p·n_rand + r]`.
pub fn point_values(field: &Field, pdf: &JointPdf, c: usize) -> Vec<f64> {
    let g = field.grid();
    let nr = g.n_rand();
    let dens: Vec<f64> = (0..nr)
        .map(|r| {
            let (x, e) = g.rand_center(r);
            pdf.eval_floored(x, e)
        })
        .collect();
    let mut out = Vec::with_capacity(g.n_phys() * nr);
    for p in 0..g.n_phys() {
        for (r, d) in dens.iter().enumerate() {
            out.push(field.get(p, r, c) / d);
        }
    }
    out
}

/// Statistics of every component of `field`, named `names[c]` (or `c0, c1, ...`).
pub fn statistics(
    field: &Field,
    pdf: &JointPdf,
    levels: &[f64],
    names: Option<&[&str]>,
) -> Result<StatisticsResult> {
    check_levels(levels)?;
    field.check_finite()?;
    let mut quantities = Vec::with_capacity(field.n_components());
    for c in 0..field.n_components() {
        let name = names.and_then(|n| n.get(c)).map_or_else(|| format!("c{c}"), |s| s.to_string());
        let values = point_values(field, pdf, c);
        quantities.push(point_statistics(&name, field.grid(), pdf, &values, levels)?);
    }
    Ok(StatisticsResult { levels: levels.to_vec(), quantities })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Axis;
    use crate::random_space::pdf::Pdf;
    use proptest::prelude::*;

    fn d1s1(nx: usize, nxi: usize) -> Grid {
        Grid::d1s1(Axis::new(0.0, 1.0, nx).unwrap(), Axis::new(-1.0, 1.0, nxi).unwrap())
    }

    fn uniform() -> JointPdf {
        JointPdf::single(Pdf::uniform(-1.0, 1.0).unwrap())
    }

    #[test]
    fn constant_field() {
        let g = d1s1(3, 8);
        let f = Field::from_values(g, 1, vec![2.5 * 0.5; 24]).unwrap();
        let s = statistics(&f, &uniform(), &[0.05, 0.95], None).unwrap();
        let q = &s.quantities[0];
        for p in 0..3 {
            assert!((q.mean[p] - 2.5).abs() < 1e-14);
            assert!(q.std[p] < 1e-7 && !q.std[p].is_nan());
            assert_eq!(q.quantiles[0][p], 2.5);
            assert_eq!(q.quantiles[1][p], 2.5);
        }
    }

    #[test]
    fn moments_of_identity_map() {
        let n = 2000;
        let g = d1s1(1, n);
        let vals: Vec<f64> = g.xi().centers().map(|x| x * 0.5).collect();
        let f = Field::from_values(g, 1, vals).unwrap();
        let s = statistics(&f, &uniform(), &[0.95], None).unwrap();
        let q = &s.quantities[0];
        assert!(q.mean[0].abs() < 1e-12);
        assert!((q.std[0] - 1.0 / 3f64.sqrt()).abs() < 1e-6);
        assert!((q.quantiles[0][0] - 0.9).abs() < 2.0 / n as f64);
    }

    #[test]
    fn rejects_bad_levels() {
        let g = d1s1(1, 5);
        let f = Field::zeros(g, 1);
        assert!(statistics(&f, &uniform(), &[1.5], None).is_err());
        assert!(statistics(&f, &uniform(), &[], None).is_ok());
    }

    proptest! {
        #[test]
        fn mean_matches_field_total(vals in prop::collection::vec(-3.0f64..3.0, 7)) {
            let g = d1s1(1, 7);
            let pdf = JointPdf::single(Pdf::normal(0.0, 0.2).unwrap());
            let f = Field::from_values(g, 1, vals).unwrap();
            let s = statistics(&f, &pdf, &[0.05, 0.95], None).unwrap();
            let q = &s.quantities[0];
            let total = f.total()[0] / g.phys_volume();
            prop_assert!((q.mean[0] - total).abs() <= 1e-14 * total.abs().max(1.0));
            prop_assert!(q.std[0] >= 0.0);
            prop_assert!(q.quantiles[1][0] >= q.quantiles[0][0]);
        }
    }
}
