//! Time evolution with output scheduling.

use super::assemble::RhsBuffer;
use super::discretization::Discretization;
use super::draining::{draining_limit, snap_negatives};
use super::ssprk::ssprk3_step;
use crate::error::{Error, Result};
use crate::grid::Field;

/// Relative size below which negative drained averages count as round-off.
pub const SNAP_TOLERANCE: f64 = 1e-12;

/// How the step size follows from the local speeds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepRule {
    /// `K·Δ/a` per direction.
    Cfl,
    /// `min(K·Δ/a, Δ^{3/2}/(2a))`, used for convergence studies.
    Accuracy,
}

/// Time-integration settings.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub cfl: f64,
    pub final_time: f64,
    /// Times at which snapshots are taken; always ends with `final_time`.
    pub output_times: Vec<f64>,
    pub rule: StepRule,
    /// Limit the model's nonnegative component by draining.
    pub draining: bool,
}

impl SolverConfig {
    pub fn new(cfl: f64, final_time: f64) -> Result<Self> {
        if !(cfl > 0.0 && cfl <= 0.5) {
            return Err(Error::Config(format!("CFL number {cfl} must lie in (0, 1/2]")));
        }
        if !(final_time >= 0.0 && final_time.is_finite()) {
            return Err(Error::Config(format!("final time {final_time} must be nonnegative")));
        }
        Ok(Self {
            cfl,
            final_time,
            output_times: vec![final_time],
            rule: StepRule::Cfl,
            draining: true,
        })
    }

    /// Replaces the output schedule; `final_time` is appended if missing.
    pub fn with_outputs(mut self, times: &[f64]) -> Result<Self> {
        let mut out: Vec<f64> = Vec::with_capacity(times.len() + 1);
        for &t in times {
            if !(t >= 0.0 && t <= self.final_time) {
                return Err(Error::Config(format!(
                    "output time {t} lies outside [0, {}]",
                    self.final_time
                )));
            }
            if out.last().is_some_and(|&prev| t <= prev) {
                return Err(Error::Config("output times must increase".into()));
            }
            out.push(t);
        }
        if out.last() != Some(&self.final_time) {
            out.push(self.final_time);
        }
        self.output_times = out;
        Ok(self)
    }

    pub fn with_rule(mut self, rule: StepRule) -> Self {
        self.rule = rule;
        self
    }

    pub fn with_draining(mut self, on: bool) -> Self {
        self.draining = on;
        self
    }
}

/// Running diagnostics of the limited component.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Diagnostics {
    /// Smallest average of the limited component over all stages.
    pub min_limited: f64,
    pub snapped: usize,
    pub worst_snap: f64,
}

impl Default for Diagnostics {
    fn default() -> Self {
        Self { min_limited: f64::INFINITY, snapped: 0, worst_snap: 0.0 }
    }
}

/// Field state advanced one step at a time.
#[derive(Debug, Clone)]
pub struct Stepper {
    pub disc: Discretization,
    values: Vec<f64>,
    time: f64,
    steps: usize,
    diagnostics: Diagnostics,
}

impl Stepper {
    pub fn new(disc: Discretization, initial: Field) -> Result<Self> {
        if initial.grid() != &disc.grid || initial.n_components() != disc.n_components() {
            return Err(Error::Config("initial field does not match the discretization".into()));
        }
        initial.check_finite()?;
        let mut diagnostics = Diagnostics::default();
        if let Some(c) = disc.model.draining_component() {
            let nc = disc.n_components();
            diagnostics.min_limited =
                initial.values().iter().skip(c).step_by(nc).copied().fold(f64::INFINITY, f64::min);
        }
        Ok(Self { disc, values: initial.into_values(), time: 0.0, steps: 0, diagnostics })
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn diagnostics(&self) -> Diagnostics {
        self.diagnostics
    }

    pub fn field(&self) -> Field {
        Field::from_values(self.disc.grid.clone(), self.disc.n_components(), self.values.clone())
            .expect("stepper keeps a finite field")
    }

    fn step_size(&self, buf: &RhsBuffer, cfg: &SolverConfig) -> Option<f64> {
        let grid = &self.disc.grid;
        buf.dirs
            .iter()
            .filter(|d| d.max_speed > 0.0)
            .map(|d| {
                let h = d.layout.spacing(grid);
                let cfl = cfg.cfl * h / d.max_speed;
                match cfg.rule {
                    StepRule::Cfl => cfl,
                    StepRule::Accuracy => cfl.min(h.powf(1.5) / (2.0 * d.max_speed)),
                }
            })
            .reduce(f64::min)
    }

    /// Takes one step no longer than `cap`; returns the step size.
    ///
    /// When the step would reach `cap` the time is set to exactly
    /// `time + cap`.
    pub fn step(&mut self, cap: f64, cfg: &SolverConfig) -> Result<f64> {
        let abort = |steps: usize, time: f64, e: Error| -> Error {
            match e {
                e if e.is_numerical() => {
                    Error::Aborted { step: steps + 1, time, detail: e.to_string() }
                }
                other => other,
            }
        };
        let (steps, time) = (self.steps, self.time);
        let first = self.disc.assemble(&self.values).map_err(|e| abort(steps, time, e))?;
        let mut dt = self.step_size(&first, cfg).unwrap_or(cap);
        let landed = dt >= cap;
        if landed {
            dt = cap;
        }
        if !(dt.is_finite() && dt > 0.0) {
            return Err(Error::Aborted {
                step: steps + 1,
                time,
                detail: format!("no usable time step (dt = {dt})"),
            });
        }
        let disc = &self.disc;
        let limited = if cfg.draining { disc.model.draining_component() } else { None };
        let nc = disc.n_components();
        let mut first = Some(first);
        let mut diag = self.diagnostics;
        let next = ssprk3_step(
            &self.values,
            dt,
            |stage, u| {
                let mut buf = match (stage, first.take()) {
                    (0, Some(b)) => b,
                    _ => disc.assemble(u)?,
                };
                if let Some(c) = limited {
                    draining_limit(disc, u, &mut buf, dt, c);
                }
                Ok(buf.rhs(disc))
            },
            |u| {
                if let Some(c) = limited {
                    let rep = snap_negatives(u, nc, c, SNAP_TOLERANCE)?;
                    diag.snapped += rep.snapped;
                    diag.worst_snap = diag.worst_snap.min(rep.worst);
                    diag.min_limited = diag.min_limited.min(rep.min_after);
                }
                Ok(())
            },
        )
        .map_err(|e| abort(steps, time, e))?;
        if let Some(i) = next.iter().position(|v| !v.is_finite()) {
            return Err(Error::Aborted {
                step: steps + 1,
                time,
                detail: format!("non-finite value in cell {} component {}", i / nc, i % nc),
            });
        }
        self.values = next;
        self.diagnostics = diag;
        self.steps += 1;
        self.time = if landed { time + cap } else { time + dt };
        Ok(dt)
    }

    /// Advances to exactly `target`.
    pub fn advance_to(&mut self, target: f64, cfg: &SolverConfig) -> Result<()> {
        while self.time < target {
            let cap = target - self.time;
            self.step(cap, cfg)?;
            if target - self.time <= 1e-14 * target.abs() {
                self.time = target;
            }
        }
        Ok(())
    }
}

/// Solution at one output time.
#[derive(Debug, Clone)]
pub struct Snapshot {
    pub time: f64,
    pub step: usize,
    pub field: Field,
}

/// Everything produced by [`run`].
#[derive(Debug, Clone)]
pub struct RunReport {
    pub snapshots: Vec<Snapshot>,
    pub steps: usize,
    pub diagnostics: Diagnostics,
    pub initial_totals: Vec<f64>,
    pub final_totals: Vec<f64>,
}

/// Evolves `initial` through every output time of `cfg`.
pub fn run(disc: Discretization, initial: Field, cfg: &SolverConfig) -> Result<RunReport> {
    let initial_totals = initial.total();
    let mut stepper = Stepper::new(disc, initial)?;
    let mut snapshots = Vec::with_capacity(cfg.output_times.len());
    for &t in &cfg.output_times {
        stepper.advance_to(t, cfg)?;
        snapshots.push(Snapshot { time: t, step: stepper.steps(), field: stepper.field() });
    }
    let final_totals = stepper.field().total();
    Ok(RunReport {
        snapshots,
        steps: stepper.steps(),
        diagnostics: stepper.diagnostics(),
        initial_totals,
        final_totals,
    })
}
