//! Command-line front end: scenario files in, CSV series and a summary out.
//!
//! Exit codes: 0 success, 2 missing file, 3 schema, 4 invariant,
//! 5 unwritable output, 6 degenerate preparation, 7 invariance tolerance
//! exceeded, 8 wraparound.

mod config;
mod run;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use config::{
    load_config, parse_config, ConfigError, GeometryConfig, GridConfig, PacketConfig, Representation, ScenarioConfig,
    SplitterConfig, Tolerances, GRID_NORM_TOL,
};
pub use run::{
    compute_invariance, compute_sweep, run_invariance_report, run_sweep, write_invariance_csv, write_sweep_csv,
    InvarianceRow, InvarianceSummary, RunError, SweepSummary, INVARIANCE_HEADER, SWEEP_HEADER,
};

#[derive(Debug, Parser)]
#[command(name = "simulate", version, about = "Exact vs. plane-wave overlap of single-photon packets at a beam splitter")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Move D2 over the configured range and export both predictions.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Propagate the split packets and report the overlap at each time.
    Invariance {
        #[arg(long)]
        config: PathBuf,
        /// Comma-separated list of times, e.g. 0,1.5,3
        #[arg(long, value_delimiter = ',', num_args = 1.., allow_negative_numbers = true, required = true)]
        times: Vec<f64>,
        #[arg(long)]
        out: PathBuf,
    },
}

impl Command {
    /// Runs the command, writing the summary to `stdout`.
    pub fn execute(&self, stdout: &mut impl Write) -> Result<(), RunError> {
        // stdout failures are not part of the exit-code contract
        match self {
            Command::Sweep { config, out } => {
                let cfg = load_config(config)?;
                let summary = run_sweep(&cfg, out)?;
                let _ = writeln!(stdout, "{summary}");
            }
            Command::Invariance { config, times, out } => {
                let cfg = load_config(config)?;
                let summary = run_invariance_report(&cfg, times, out)?;
                let _ = writeln!(stdout, "{summary}");
            }
        }
        Ok(())
    }
}

/// Parses `args` and runs; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match cli.command.execute(&mut std::io::stdout()) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
