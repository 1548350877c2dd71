//! A fully specified run: mesh, model, density, initial data and schedule.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grid::{Field, Grid};
use crate::models::{euler, Model, Point};
use crate::random_space::{point_statistics, JointPdf, StatisticsResult};
use crate::solver::{node_coords, run, Discretization, RunReport, SchemeParams, SolverConfig};

/// Closed-form initial data.
#[derive(Clone)]
pub enum InitialData {
    /// Primitive gas state `(ρ, u, v, p)`; `v` is ignored in 1-D.
    Gas(Arc<dyn Fn(Point) -> [f64; 4] + Send + Sync>),
    /// Water surface and velocities `(w, u, v)`; `v` is ignored in 1-D.
    Water(Arc<dyn Fn(Point) -> [f64; 3] + Send + Sync>),
}

impl InitialData {
    pub fn gas(f: impl Fn(Point) -> [f64; 4] + Send + Sync + 'static) -> Self {
        InitialData::Gas(Arc::new(f))
    }

    pub fn water(f: impl Fn(Point) -> [f64; 3] + Send + Sync + 'static) -> Self {
        InitialData::Water(Arc::new(f))
    }
}

impl fmt::Debug for InitialData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InitialData::Gas(_) => f.write_str("Gas(<fn>)"),
            InitialData::Water(_) => f.write_str("Water(<fn>)"),
        }
    }
}

/// Everything needed to run one simulation.
#[derive(Debug, Clone)]
pub struct Problem {
    pub name: String,
    pub grid: Grid,
    pub model: Model,
    pub pdf: JointPdf,
    pub scheme: SchemeParams,
    pub solver: SolverConfig,
    pub initial: InitialData,
    /// Quantile levels reported with every snapshot.
    pub levels: Vec<f64>,
}

/// Statistics at one output time.
#[derive(Debug, Clone)]
pub struct OutputStats {
    pub time: f64,
    pub step: usize,
    pub stats: StatisticsResult,
}

/// Result of [`Problem::solve`].
#[derive(Debug, Clone)]
pub struct Solution {
    pub disc: Discretization,
    pub report: RunReport,
    pub outputs: Vec<OutputStats>,
}

/// Physical sub-sample offsets (in cell widths): midpoints of the thirds.
const THIRDS: [f64; 3] = [-1.0 / 3.0, 0.0, 1.0 / 3.0];

impl Problem {
    pub fn discretization(&self) -> Result<Discretization> {
        Discretization::new(self.grid.clone(), self.model.clone(), self.pdf.clone(), self.scheme)
    }

    /// Weighted cell averages of the initial data.
    ///
    /// Each cell average is a tensor rule: the three-node rule in every
    /// random variable (weights `μν(node)`) times the midpoints of the thirds
    /// of the cell in every space dimension. For shallow water the surface
    /// is averaged and the bottom average is subtracted, so a flat surface
    /// over any bottom gives `h̄ + Z̄` exactly equal to the averaged surface.
    pub fn initial_field(&self, disc: &Discretization) -> Result<Field> {
        if matches!(self.initial, InitialData::Water(_))
            != matches!(disc.model, Model::ShallowWater(_))
        {
            return Err(Error::Config("initial data does not match the model".into()));
        }
        let grid = &disc.grid;
        let nc = disc.n_components();
        let nr = grid.n_rand();
        let nn = disc.nodes.n_nodes();
        let dims = disc.model.dims();
        let (dx, dy) = (grid.dx(), grid.dy());
        let subs: Vec<(f64, f64, f64)> = if dims == 2 {
            THIRDS
                .iter()
                .flat_map(|a| THIRDS.iter().map(move |b| (a * dx, b * dy, 1.0 / 9.0)))
                .collect()
        } else {
            THIRDS.iter().map(|a| (a * dx, 0.0, 1.0 / 3.0)).collect()
        };
        let mut values = Vec::with_capacity(grid.n_cells() * nc);
        let mut acc = vec![0.0; nc];
        for p in 0..grid.n_phys() {
            let (xc, yc) = grid.phys_center(p);
            for r in 0..nr {
                acc.fill(0.0);
                let w = disc.nodes.weights(r);
                let mut wet = false;
                for q in 0..nn {
                    let (xi, eta) = node_coords(grid, r, q);
                    for &(ox, oy, ws) in &subs {
                        let pt = Point { x: xc + ox, y: yc + oy, xi, eta };
                        let weight = w[q] * ws;
                        match &self.initial {
                            InitialData::Gas(f) => {
                                let [rho, u, v, pr] = f(pt);
                                let gamma = disc.model.gamma_at(xi, eta);
                                let vel: &[f64] = if dims == 2 { &[u, v] } else { &[u] };
                                acc[0] += weight * rho;
                                for (k, vk) in vel.iter().enumerate() {
                                    acc[1 + k] += weight * rho * vk;
                                }
                                acc[nc - 1] += weight * euler::total_energy(rho, vel, pr, gamma);
                            }
                            InitialData::Water(f) => {
                                let [s, u, v] = f(pt);
                                let z = match &disc.model {
                                    Model::ShallowWater(m) => m.bottom.eval(pt),
                                    Model::Euler(_) => 0.0,
                                };
                                let h = (s - z).max(0.0);
                                wet |= h > 0.0;
                                acc[0] += weight * s;
                                acc[1] += weight * h * u;
                                if dims == 2 {
                                    acc[2] += weight * h * v;
                                }
                            }
                        }
                    }
                }
                if let InitialData::Water(_) = &self.initial {
                    acc[0] = if wet { (acc[0] - disc.zbar()[p * nr + r]).max(0.0) } else { 0.0 };
                }
                if let Some(c) = acc.iter().position(|v| !v.is_finite()) {
                    return Err(Error::NonFinite {
                        location: format!("initial data, cell ({p}, {r}), component {c}"),
                    });
                }
                values.extend_from_slice(&acc);
            }
        }
        Field::from_values(grid.clone(), nc, values)
    }

    /// Runs to the final time, collecting statistics at every output time.
    pub fn solve(&self) -> Result<Solution> {
        let disc = self.discretization()?;
        let initial = self.initial_field(&disc)?;
        let report = run(disc.clone(), initial, &self.solver)?;
        let outputs = report
            .snapshots
            .iter()
            .map(|s| {
                Ok(OutputStats {
                    time: s.time,
                    step: s.step,
                    stats: solution_statistics(&disc, &s.field, &self.levels)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Solution { disc, report, outputs })
    }
}

/// Statistics of every conserved component plus the derived quantity of the
/// model: pressure `p` for gas dynamics, water surface `w` for shallow water.
///
/// Derived quantities are formed from the recovered point values at
/// random-cell centers before any averaging.
pub fn solution_statistics(
    disc: &Discretization,
    field: &Field,
    levels: &[f64],
) -> Result<StatisticsResult> {
    field.check_finite()?;
    let grid = &disc.grid;
    let nr = grid.n_rand();
    let nc = disc.n_components();
    let names = disc.model.component_names();
    let dens = disc.nodes.center_densities();
    let centre = disc.nodes.center_node();
    let nn = disc.nodes.n_nodes();
    let point = |p: usize, r: usize, c: usize| field.get(p, r, c) / dens[r];
    let mut quantities = Vec::with_capacity(nc + 1);
    let mut buf = vec![0.0; grid.n_phys() * nr];
    for (c, name) in names.iter().enumerate() {
        for p in 0..grid.n_phys() {
            for r in 0..nr {
                buf[p * nr + r] = point(p, r, c);
            }
        }
        quantities.push(point_statistics(name, grid, &disc.pdf, &buf, levels)?);
    }
    let mut state = vec![0.0; nc];
    let derived = match &disc.model {
        Model::Euler(_) => "p",
        Model::ShallowWater(_) => "w",
    };
    for p in 0..grid.n_phys() {
        for r in 0..nr {
            buf[p * nr + r] = match &disc.model {
                Model::Euler(_) => {
                    for (c, s) in state.iter_mut().enumerate() {
                        *s = point(p, r, c);
                    }
                    euler::pressure(&state, disc.gamma[r * nn + centre])
                }
                Model::ShallowWater(_) => {
                    (field.get(p, r, 0) + disc.zbar()[p * nr + r]) / dens[r]
                }
            };
        }
    }
    quantities.push(point_statistics(derived, grid, &disc.pdf, &buf, levels)?);
    Ok(StatisticsResult { levels: levels.to_vec(), quantities })
}
