//! Plain-text output of statistics and run diagnostics.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::random_space::StatisticsResult;

use super::problem::Solution;

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io { path: path.display().to_string(), source }
}

/// Column label of a quantile level: `0.95 → q95`, `0.025 → q2.5`.
pub fn level_label(level: f64) -> String {
    let pct = (level * 100.0 * 1e9).round() / 1e9;
    format!("q{pct}")
}

/// Table of one quantity: `x[,y],mean,std,q..` with 17 significant digits.
pub fn stats_table(
    centers: &[(f64, f64)],
    two_d: bool,
    stats: &StatisticsResult,
    quantity: &str,
) -> Result<String> {
    let q = stats
        .get(quantity)
        .ok_or_else(|| Error::Config(format!("no statistics for `{quantity}`")))?;
    let mut s = String::new();
    s.push_str(if two_d { "x,y,mean,std" } else { "x,mean,std" });
    for &l in &stats.levels {
        s.push(',');
        s.push_str(&level_label(l));
    }
    s.push('\n');
    for (p, &(x, y)) in centers.iter().enumerate() {
        let _ = write!(s, "{x:.16e}");
        if two_d {
            let _ = write!(s, ",{y:.16e}");
        }
        let _ = write!(s, ",{:.16e},{:.16e}", q.mean[p], q.std[p]);
        for k in 0..stats.levels.len() {
            let _ = write!(s, ",{:.16e}", q.quantiles[k][p]);
        }
        s.push('\n');
    }
    Ok(s)
}

/// Writes `<quantity>_<k>.csv` for every output time `k` and quantity, and a
/// `manifest.txt` holding `settings_text` and the run diagnostics. Returns the
/// paths written, manifest last.
pub fn write_outputs(solution: &Solution, settings_text: &str, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let grid = &solution.disc.grid;
    let two_d = grid.y().is_some();
    let centers: Vec<(f64, f64)> = (0..grid.n_phys()).map(|p| grid.phys_center(p)).collect();
    let mut written = Vec::new();
    let mut listing = String::new();
    for (k, out) in solution.outputs.iter().enumerate() {
        for q in &out.stats.quantities {
            let name = format!("{}_{k:03}.csv", q.name);
            let path = dir.join(&name);
            let table = stats_table(&centers, two_d, &out.stats, &q.name)?;
            fs::write(&path, table).map_err(io_err(&path))?;
            let _ = writeln!(listing, "{name}  t = {:.16e}  step = {}", out.time, out.step);
            written.push(path);
        }
    }
    let r = &solution.report;
    let mut m = String::new();
    m.push_str("[settings]\n");
    m.push_str(settings_text);
    m.push_str("\n[grid]\n");
    let _ = writeln!(m, "layout = {}", grid.layout().name());
    let _ = writeln!(m, "cells = {} physical x {} random", grid.n_phys(), grid.n_rand());
    let _ = writeln!(m, "density = {}", solution.disc.pdf.describe());
    m.push_str("\n[run]\n");
    let _ = writeln!(m, "steps = {}", r.steps);
    let names = solution.disc.model.component_names();
    for (c, name) in names.iter().enumerate() {
        let _ = writeln!(
            m,
            "total {name}: initial = {:.16e}, final = {:.16e}",
            r.initial_totals[c], r.final_totals[c]
        );
    }
    if solution.disc.model.draining_component().is_some() {
        let d = r.diagnostics;
        let _ = writeln!(m, "min limited average over all stages = {:.16e}", d.min_limited);
        let _ = writeln!(m, "round-off negatives set to zero = {}", d.snapped);
        let _ = writeln!(m, "most negative round-off = {:.16e}", d.worst_snap);
    }
    m.push_str("\n[files]\n");
    m.push_str(&listing);
    let path = dir.join("manifest.txt");
    fs::write(&path, m).map_err(io_err(&path))?;
    written.push(path);
    Ok(written)
}
