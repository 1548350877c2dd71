use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use stochastic_fv::io::{self, Settings};
use stochastic_fv::Error;

#[derive(Parser)]
#[command(name = "sfv", version, about = "Finite-volume solver for conservation laws with random inputs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a configuration and write statistics at every output time.
    Solve(RunArgs),
    /// Print the available presets.
    ListPresets,
    /// Run a nested-mesh convergence study and print the error/rate table.
    Converge(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Configuration file (`key = value` lines, first line `preset = <name>`).
    config: PathBuf,
    /// Output directory.
    #[arg(long, default_value = "output")]
    out: PathBuf,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Override a configuration entry; may be repeated.
    #[arg(long = "override", value_name = "KEY=VALUE")]
    overrides: Vec<String>,
}

fn settings(args: &RunArgs) -> Result<Settings, Error> {
    if let Some(n) = args.threads {
        if n == 0 {
            return Err(Error::Config("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::Config(format!("cannot start {n} threads: {e}")))?;
    }
    let mut s = io::load_config(&args.config)?;
    for o in &args.overrides {
        s.apply_override(o)?;
    }
    s.validate()?;
    Ok(s)
}

fn solve(args: &RunArgs) -> Result<(), Error> {
    let s = settings(args)?;
    let problem = io::build(&s)?;
    let start = Instant::now();
    let solution = problem.solve()?;
    let files = io::write_outputs(&solution, &s.to_text(), &args.out)?;
    println!(
        "{}: {} steps to t = {}, {} files in {} ({:.2} s)",
        s.preset,
        solution.report.steps,
        s.final_time,
        files.len(),
        args.out.display(),
        start.elapsed().as_secs_f64()
    );
    Ok(())
}

fn converge(args: &RunArgs) -> Result<(), Error> {
    let s = settings(args)?;
    let table = io::convergence_study(&s)?;
    let text = table.to_text();
    std::fs::create_dir_all(&args.out)
        .map_err(|source| Error::Io { path: args.out.display().to_string(), source })?;
    let path = args.out.join("convergence.csv");
    std::fs::write(&path, &text)
        .map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    print!("{text}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::ListPresets => {
            for p in io::PRESETS {
                println!("{:<16} {}", p.name, p.summary);
            }
            Ok(())
        }
        Command::Solve(args) => solve(args),
        Command::Converge(args) => converge(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_config() {
                ExitCode::from(2)
            } else if e.is_numerical() {
                ExitCode::from(3)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
