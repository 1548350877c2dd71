//! Named benchmark problems.

use crate::error::{Error, Result};
use crate::grid::{Axis, Grid};
use crate::models::{Bottom, GammaLaw, Model, Point, RandomAxis};
use crate::random_space::{JointPdf, Pdf};
use crate::recon::Boundary;
use crate::solver::{SchemeParams, SolverConfig, StepRule};

use super::config::{PdfChoice, Settings};
use super::problem::{InitialData, Problem};

/// Name and one-line description of a preset.
#[derive(Debug, Clone, Copy)]
pub struct PresetInfo {
    pub name: &'static str,
    pub summary: &'static str,
}

pub const PRESETS: &[PresetInfo] = &[
    PresetInfo { name: "example1_test1", summary: "1-D Sod shock tube, random left density 1 + σξ" },
    PresetInfo { name: "example1_test2", summary: "1-D Sod shock tube, random γ = 1.4 + 0.1ξ" },
    PresetInfo {
        name: "example2",
        summary: "1-D Sod shock tube, random left density (ξ) and γ (η)",
    },
    PresetInfo { name: "example3", summary: "2-D four-state Riemann problem, perturbed by σξ" },
    PresetInfo {
        name: "example4",
        summary: "1-D smooth periodic shallow water, random surface (convergence study)",
    },
    PresetInfo { name: "example5", summary: "1-D dam break over a random bottom" },
    PresetInfo { name: "example6", summary: "1-D small random surface perturbation over a bump" },
    PresetInfo { name: "example7", summary: "1-D flow over a random discontinuous bottom, beta law" },
    PresetInfo {
        name: "example8",
        summary: "1-D random surface and discharge, wetting and drying over an island",
    },
    PresetInfo { name: "example9", summary: "2-D small perturbation over a random hump" },
];

fn base(name: &str, nx: usize, nxi: usize, theta: f64, final_time: f64) -> Settings {
    Settings {
        preset: name.to_string(),
        sigma: 0.0,
        pdf: PdfChoice::Uniform,
        nx,
        ny: 1,
        nxi,
        neta: 1,
        theta,
        eps: 1e-6,
        cfl: 0.45,
        final_time,
        output_times: Vec::new(),
        levels: vec![0.95],
        step_rule: StepRule::Cfl,
        draining: true,
        converge_nxi: vec![8, 16, 32],
        converge_nx: vec![36, 216, 1296],
    }
}

/// Default settings of a preset.
pub fn defaults(name: &str) -> Result<Settings> {
    let s = match name {
        "example1_test1" => Settings { sigma: 0.1, ..base(name, 200, 50, 1.3, 0.1644) },
        "example1_test2" => base(name, 200, 50, 1.3, 0.1644),
        "example2" => Settings { neta: 50, ..base(name, 200, 50, 1.3, 0.1644) },
        "example3" => Settings { sigma: 0.5, ny: 400, ..base(name, 400, 10, 1.3, 0.15) },
        "example4" => Settings { step_rule: StepRule::Accuracy, ..base(name, 200, 16, 1.0, 0.01) },
        "example5" => Settings { eps: 1e-3, ..base(name, 1600, 50, 1.3, 0.8) },
        "example6" => base(name, 1600, 50, 1.3, 1.0),
        "example7" => Settings { eps: 1e-5, ..base(name, 401, 50, 1.0, 0.15) },
        "example8" => Settings {
            eps: 5e-4,
            neta: 10,
            output_times: vec![0.0, 0.5, 0.75, 1.0],
            ..base(name, 600, 10, 1.0, 1.0)
        },
        "example9" => Settings { ny: 200, ..base(name, 400, 10, 1.3, 1.2) },
        _ => {
            let known: Vec<&str> = PRESETS.iter().map(|p| p.name).collect();
            return Err(Error::Config(format!(
                "unknown preset `{name}` (available: {})",
                known.join(", ")
            )));
        }
    };
    Ok(s)
}

fn uniform() -> Pdf {
    Pdf::Uniform { lo: -1.0, hi: 1.0 }
}

fn axis(lo: f64, hi: f64, n: usize) -> Result<Axis> {
    Axis::new(lo, hi, n).map_err(|e| Error::Config(e.to_string()))
}

/// Builds the problem described by `s`.
pub fn build(s: &Settings) -> Result<Problem> {
    s.validate()?;
    let sigma = s.sigma;
    let xi = axis(-1.0, 1.0, s.nxi)?;
    let d1s1 = |lo: f64, hi: f64| -> Result<Grid> { Ok(Grid::d1s1(axis(lo, hi, s.nx)?, xi)) };
    let d1s2 =
        |lo: f64, hi: f64| -> Result<Grid> { Ok(Grid::d1s2(axis(lo, hi, s.nx)?, xi, axis(-1.0, 1.0, s.neta)?)) };
    let d2s1 = |x: (f64, f64), y: (f64, f64)| -> Result<Grid> {
        Ok(Grid::d2s1(axis(x.0, x.1, s.nx)?, axis(y.0, y.1, s.ny)?, xi))
    };
    let single = JointPdf::single(uniform());
    let swe = |g: f64, bottom: Bottom, dims: usize| Model::shallow_water(g, s.eps, bottom, dims);

    let (grid, model, pdf, bc, initial) = match s.preset.as_str() {
        "example1_test1" => {
            let pdf = match s.pdf {
                PdfChoice::Uniform => uniform(),
                PdfChoice::Normal => Pdf::normal(0.0, 1.0 / 36.0)?,
            };
            let ic = InitialData::gas(move |p: Point| {
                if p.x < 0.5 {
                    [1.0 + sigma * p.xi, 0.0, 0.0, 1.0]
                } else {
                    [0.125, 0.0, 0.0, 0.1]
                }
            });
            let m = Model::euler(GammaLaw::constant(1.4), 1)?;
            (d1s1(0.0, 1.0)?, m, JointPdf::single(pdf), Boundary::Free, ic)
        }
        "example1_test2" => {
            let m = Model::euler(GammaLaw::affine(1.4, 0.1, RandomAxis::Xi), 1)?;
            (d1s1(0.0, 1.0)?, m, single, Boundary::Free, sod())
        }
        "example2" => {
            let m = Model::euler(GammaLaw::affine(1.4, 0.1, RandomAxis::Eta), 1)?;
            let ic = InitialData::gas(|p: Point| {
                if p.x < 0.5 {
                    [1.0 + 0.1 * p.xi, 0.0, 0.0, 1.0]
                } else {
                    [0.125, 0.0, 0.0, 0.1]
                }
            });
            (d1s2(0.0, 1.0)?, m, JointPdf::product(uniform(), uniform()), Boundary::Free, ic)
        }
        "example3" => {
            let ic = InitialData::gas(move |p: Point| {
                let e = sigma * p.xi;
                match (p.x > 0.5, p.y > 0.5) {
                    (true, true) => [1.0, 0.0, 0.4297 * (1.0 - e), 1.0],
                    (false, true) => [0.5 * (1.0 + e), e, 0.6076 * (1.0 - e), 1.0 - e],
                    (false, false) => [0.2281 * (1.0 + e), 0.0, -0.6076 * (1.0 + e), 0.3333],
                    (true, false) => [0.4562, 0.0, -0.4297 * (1.0 + e), 0.3333],
                }
            });
            let m = Model::euler(GammaLaw::constant(1.4), 2)?;
            (d2s1((0.0, 1.0), (0.0, 1.0))?, m, single, Boundary::Free, ic)
        }
        "example4" => {
            let ic = InitialData::water(|p: Point| {
                let w = 1.0
                    + 0.1 * (4.0 * p.xi).tanh()
                    + 0.01 * (2.0 * std::f64::consts::PI * p.x).sin();
                [w, 0.1, 0.0]
            });
            (d1s1(0.0, 1.0)?, swe(1.0, Bottom::flat(0.0), 1)?, single, Boundary::Periodic, ic)
        }
        "example5" => {
            let ic = InitialData::water(|p: Point| [if p.x < 0.0 { 1.0 } else { 0.5 }, 0.0, 0.0]);
            (d1s1(-1.0, 1.0)?, swe(1.0, example5_bottom(), 1)?, single, Boundary::Free, ic)
        }
        "example6" => {
            let ic = InitialData::water(|p: Point| {
                let w = if p.x > 0.1 && p.x < 0.2 { 1.001 + 0.001 * p.xi } else { 1.0 };
                [w, 0.0, 0.0]
            });
            let bottom = Bottom::new(|p: Point| {
                let x = p.x;
                if (0.3..=0.4).contains(&x) {
                    10.0 * (x - 0.3)
                } else if (0.4..=0.6).contains(&x) {
                    let s = (25.0 * std::f64::consts::PI * x).sin();
                    1.0 - 0.0025 * s * s
                } else if (0.6..=0.7).contains(&x) {
                    -10.0 * (x - 0.7)
                } else {
                    0.0
                }
            });
            (d1s1(-1.0, 1.0)?, swe(1.0, bottom, 1)?, single, Boundary::Free, ic)
        }
        "example7" => {
            let ic = InitialData::water(|p: Point| {
                if p.x <= 0.5 {
                    [5.0, 1.0, 0.0]
                } else {
                    [1.6, -2.0, 0.0]
                }
            });
            let bottom =
                Bottom::new(|p: Point| if p.x <= 0.5 { 1.5 + 0.1 * p.xi } else { 1.1 + 0.1 * p.xi });
            let pdf = JointPdf::single(Pdf::beta_shifted(2.0, 4.0)?);
            (d1s1(0.0, 1.0)?, swe(2.0, bottom, 1)?, pdf, Boundary::Free, ic)
        }
        "example8" => {
            let ic = InitialData::water(|p: Point| {
                let bump = if p.x > -1.6 && p.x < -1.4 { 0.1 * (1.0 + 0.1 * p.xi) } else { 0.0 };
                [0.9f64.max(example8_bottom(p.x)) + bump, 0.01 * p.eta, 0.0]
            });
            let bottom = Bottom::new(|p: Point| example8_bottom(p.x));
            let pdf = JointPdf::product(uniform(), uniform());
            (d1s2(-4.0, 2.0)?, swe(9.812, bottom, 1)?, pdf, Boundary::Free, ic)
        }
        "example9" => {
            let ic = InitialData::water(|p: Point| {
                let z = example9_bottom(p);
                let level: f64 = if p.x > 0.05 && p.x < 0.15 { 1.01 } else { 1.0 };
                [level.max(z), 0.0, 0.0]
            });
            let m = swe(1.0, Bottom::new(example9_bottom), 2)?;
            (d2s1((0.0, 2.0), (0.0, 1.0))?, m, single, Boundary::Free, ic)
        }
        other => return Err(defaults(other).err().unwrap_or_else(|| Error::Config(other.into()))),
    };
    let solver = SolverConfig::new(s.cfl, s.final_time)?
        .with_outputs(&s.output_times)?
        .with_rule(s.step_rule)
        .with_draining(s.draining);
    Ok(Problem {
        name: s.preset.clone(),
        grid,
        model,
        pdf,
        scheme: SchemeParams::new(s.theta, bc)?,
        solver,
        initial,
        levels: s.levels.clone(),
    })
}

/// Deterministic Sod data `(1, 0, 1) | (0.125, 0, 0.1)` split at `x = 0.5`.
pub fn sod() -> InitialData {
    InitialData::gas(|p: Point| if p.x < 0.5 { [1.0, 0.0, 0.0, 1.0] } else { [0.125, 0.0, 0.0, 0.1] })
}

/// Random bottom of the dam-break preset.
pub fn example5_bottom() -> Bottom {
    Bottom::new(|p: Point| {
        let det = if p.x.abs() < 0.2 {
            0.125 * ((5.0 * std::f64::consts::PI * p.x).cos() + 2.0)
        } else {
            0.125
        };
        0.125 * p.xi + det
    })
}

/// Parabolic island `1 − x²` on `|x| < 1`.
pub fn example8_bottom(x: f64) -> f64 {
    if x > -1.0 && x < 1.0 {
        1.0 - x * x
    } else {
        0.0
    }
}

/// Gaussian hump raised by `0.1(ξ + 1)`.
pub fn example9_bottom(p: Point) -> f64 {
    let (dx, dy) = (p.x - 0.9, p.y - 0.5);
    0.8 * (-5.0 * dx * dx - 50.0 * dy * dy).exp() + 0.1 * (p.xi + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_preset_builds() {
        for info in PRESETS {
            let mut s = defaults(info.name).unwrap();
            s.nx = s.nx.min(12);
            s.ny = s.ny.min(6);
            s.nxi = s.nxi.min(5);
            s.neta = s.neta.min(5);
            let p = build(&s).unwrap();
            let d = p.discretization().unwrap();
            let f = p.initial_field(&d).unwrap();
            assert!(f.values().iter().all(|v| v.is_finite()), "{}", info.name);
        }
    }

    #[test]
    fn dam_break_defaults() {
        let s = defaults("example5").unwrap();
        assert_eq!((s.nx, s.nxi, s.theta, s.eps, s.final_time), (1600, 50, 1.3, 1e-3, 0.8));
        let p = build(&s).unwrap();
        assert!((p.grid.dx() - 1.0 / 800.0).abs() < 1e-15);
    }

    #[test]
    fn unknown_preset() {
        assert!(defaults("example10").is_err());
    }
}
