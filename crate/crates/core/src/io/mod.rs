//! Problem setup, presets, configuration files, output and convergence studies.

pub mod config;
pub mod convergence;
pub mod output;
pub mod presets;
pub mod problem;

pub use config::{load_config, parse_config, PdfChoice, Settings};
pub use convergence::{convergence_study, restrict, runge, ConvergenceTable, RungeEstimate};
pub use output::{level_label, stats_table, write_outputs};
pub use presets::{build, defaults, PresetInfo, PRESETS};
pub use problem::{solution_statistics, InitialData, OutputStats, Problem, Solution};
