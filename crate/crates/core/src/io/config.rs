//! Flat `key = value` run configuration.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::solver::StepRule;

/// Density of the first random variable, for presets that offer a choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdfChoice {
    Uniform,
    Normal,
}

/// Resolved run settings: a preset name plus every overridable parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct Settings {
    pub preset: String,
    pub sigma: f64,
    pub pdf: PdfChoice,
    pub nx: usize,
    /// Cells along `y` (2-D presets only).
    pub ny: usize,
    pub nxi: usize,
    /// Cells along `η` (presets with two random variables only).
    pub neta: usize,
    pub theta: f64,
    /// Desingularization length (shallow-water presets only).
    pub eps: f64,
    pub cfl: f64,
    pub final_time: f64,
    pub output_times: Vec<f64>,
    pub levels: Vec<f64>,
    pub step_rule: StepRule,
    pub draining: bool,
    /// Nested random meshes of a convergence study, coarse to fine.
    pub converge_nxi: Vec<usize>,
    /// Matching physical meshes.
    pub converge_nx: Vec<usize>,
}

const KEYS: &[&str] = &[
    "preset",
    "sigma",
    "pdf",
    "nx",
    "ny",
    "nxi",
    "neta",
    "theta",
    "eps",
    "cfl",
    "final_time",
    "output_times",
    "levels",
    "step_rule",
    "draining",
    "converge_nxi",
    "converge_nx",
];

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .trim()
        .parse()
        .map_err(|_| Error::Config(format!("malformed value `{value}` for `{key}`")))
}

fn parse_list<T: FromStr>(key: &str, value: &str) -> Result<Vec<T>> {
    if value.trim().is_empty() {
        return Ok(Vec::new());
    }
    value.split(',').map(|v| parse(key, v)).collect()
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

impl Settings {
    /// Applies one `key = value` assignment.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let key = key.trim();
        let value = value.trim();
        match key {
            "preset" => {
                return Err(Error::Config("`preset` can only be given once, first".into()));
            }
            "sigma" => self.sigma = parse(key, value)?,
            "pdf" => {
                self.pdf = match value {
                    "uniform" => PdfChoice::Uniform,
                    "normal" => PdfChoice::Normal,
                    _ => return Err(Error::Config(format!("unknown density `{value}`"))),
                }
            }
            "nx" => self.nx = parse(key, value)?,
            "ny" => self.ny = parse(key, value)?,
            "nxi" => self.nxi = parse(key, value)?,
            "neta" => self.neta = parse(key, value)?,
            "theta" => self.theta = parse(key, value)?,
            "eps" => self.eps = parse(key, value)?,
            "cfl" => self.cfl = parse(key, value)?,
            "final_time" => self.final_time = parse(key, value)?,
            "output_times" => self.output_times = parse_list(key, value)?,
            "levels" => self.levels = parse_list(key, value)?,
            "step_rule" => {
                self.step_rule = match value {
                    "cfl" => StepRule::Cfl,
                    "accuracy" => StepRule::Accuracy,
                    _ => return Err(Error::Config(format!("unknown step rule `{value}`"))),
                }
            }
            "draining" => self.draining = parse(key, value)?,
            "converge_nxi" => self.converge_nxi = parse_list(key, value)?,
            "converge_nx" => self.converge_nx = parse_list(key, value)?,
            _ => {
                return Err(Error::Config(format!(
                    "unknown key `{key}` (known keys: {})",
                    KEYS.join(", ")
                )))
            }
        }
        Ok(())
    }

    /// Applies a `key=value` override.
    pub fn apply_override(&mut self, assignment: &str) -> Result<()> {
        let (k, v) = assignment
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("override `{assignment}` is not key=value")))?;
        self.set(k, v)
    }

    /// Checks ranges that do not depend on the preset.
    pub fn validate(&self) -> Result<()> {
        if !(1.0..=2.0).contains(&self.theta) {
            return Err(Error::Config(format!("theta = {} must lie in [1, 2]", self.theta)));
        }
        if !(self.cfl > 0.0 && self.cfl <= 0.5) {
            return Err(Error::Config(format!("cfl = {} must lie in (0, 1/2]", self.cfl)));
        }
        if !(self.final_time >= 0.0 && self.final_time.is_finite()) {
            return Err(Error::Config(format!("final_time = {} is invalid", self.final_time)));
        }
        if !(self.eps > 0.0) {
            return Err(Error::Config(format!("eps = {} must be positive", self.eps)));
        }
        if !self.sigma.is_finite() {
            return Err(Error::Config("sigma must be finite".into()));
        }
        for (name, n) in [("nxi", self.nxi), ("neta", self.neta)] {
            crate::weno::check_line_len(n).map_err(|e| Error::Config(format!("{name}: {e}")))?;
        }
        for &l in &self.levels {
            if !(0.0..=1.0).contains(&l) {
                return Err(Error::Config(format!("quantile level {l} is outside [0, 1]")));
            }
        }
        Ok(())
    }

    /// Canonical text form; parsing it yields the same settings.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "preset = {}", self.preset);
        let _ = writeln!(s, "sigma = {}", self.sigma);
        let pdf = match self.pdf {
            PdfChoice::Uniform => "uniform",
            PdfChoice::Normal => "normal",
        };
        let _ = writeln!(s, "pdf = {pdf}");
        for (k, v) in [("nx", self.nx), ("ny", self.ny), ("nxi", self.nxi), ("neta", self.neta)] {
            let _ = writeln!(s, "{k} = {v}");
        }
        let _ = writeln!(s, "theta = {}", self.theta);
        let _ = writeln!(s, "eps = {}", self.eps);
        let _ = writeln!(s, "cfl = {}", self.cfl);
        let _ = writeln!(s, "final_time = {}", self.final_time);
        let _ = writeln!(s, "output_times = {}", join(&self.output_times));
        let _ = writeln!(s, "levels = {}", join(&self.levels));
        let rule = match self.step_rule {
            StepRule::Cfl => "cfl",
            StepRule::Accuracy => "accuracy",
        };
        let _ = writeln!(s, "step_rule = {rule}");
        let _ = writeln!(s, "draining = {}", self.draining);
        let _ = writeln!(s, "converge_nxi = {}", join(&self.converge_nxi));
        let _ = writeln!(s, "converge_nx = {}", join(&self.converge_nx));
        s
    }
}

/// Splits configuration text into `(line number, key, value)` triples.
fn assignments(text: &str) -> Result<Vec<(usize, String, String)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            Error::Config(format!("line {}: expected `key = value`, got `{line}`", i + 1))
        })?;
        out.push((i + 1, k.trim().to_string(), v.trim().to_string()));
    }
    Ok(out)
}

/// Parses configuration text. The first assignment must name the preset,
/// whose defaults are then overridden by the remaining lines.
///
/// ```
/// use stochastic_fv::io::parse_config;
/// let s = parse_config("preset = example1_test1\nsigma = 0.3  # larger spread\n").unwrap();
/// assert_eq!(s.sigma, 0.3);
/// assert_eq!(s.nx, 200);
/// assert!(parse_config("preset = nope").is_err());
/// ```
pub fn parse_config(text: &str) -> Result<Settings> {
    let items = assignments(text)?;
    let mut iter = items.into_iter();
    let (_, key, name) =
        iter.next().ok_or_else(|| Error::Config("configuration is empty".into()))?;
    if key != "preset" {
        return Err(Error::Config("the first assignment must be `preset = <name>`".into()));
    }
    let mut settings = super::presets::defaults(&name)?;
    for (line, k, v) in iter {
        settings.set(&k, &v).map_err(|e| match e {
            Error::Config(msg) => Error::Config(format!("line {line}: {msg}")),
            other => other,
        })?;
    }
    settings.validate()?;
    Ok(settings)
}

/// Reads and parses a configuration file.
pub fn load_config(path: &Path) -> Result<Settings> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Config(format!(
        "cannot read configuration {}: {source}",
        path.display()
    )))?;
    parse_config(&text)
}
