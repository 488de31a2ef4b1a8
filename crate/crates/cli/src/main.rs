//! `darkex`: figure datasets, probe spectra, time traces and the
//! exact-diagonalization oracle for dark excitons in a super-lattice.
//!
//! Exit codes: 0 success, 2 configuration error, 3 numerical-domain error.

mod commands;
mod config;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::commands::Command;
use crate::config::{RunConfig, Sweep};
use crate::error::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(
    name = "darkex",
    version,
    about = "Dark excitons in an atomic super-lattice next to a waveguide"
)]
struct Args {
    #[command(subcommand)]
    command: Cmd,

    /// JSON run configuration; missing fields take the reference values
    #[arg(long, global = true, conflicts_with = "preset")]
    config: Option<PathBuf>,

    /// Built-in parameter set
    #[arg(long, global = true, value_enum)]
    preset: Option<Preset>,

    /// Output CSV path; stdout when omitted
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Sweep as <var>:<min>:<max>:<n> with var one of theta (deg), k (1/Å), E_drive (eV, offset from E_a)
    #[arg(long, global = true)]
    sweep: Option<String>,

    /// Also write a gnuplot script to <out>.gp
    #[arg(long, global = true)]
    plot_script: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Preset {
    /// The reference set: E_A = 1.5 eV, a = 1000 Å, R = 100 Å, θ = 80°, N = 1 pumped polariton
    Paper,
}

#[derive(Debug, Clone, Copy, Subcommand)]
enum Cmd {
    /// E_±, E_s, E_a at k = 0 against θ
    Levels,
    /// E_±, E_ph, E_s, E_a against k
    Dispersion,
    /// Exciton and photon fractions of both branches against k
    Fractions,
    /// Scaled probe intensities against E - E_a
    Spectrum,
    /// RK4 time traces of |A|², |B₊|², |B₋|²
    Evolve,
    /// Exact diagonalization checks of the band and the blocking picture
    Oracle,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Levels => Command::Levels,
            Cmd::Dispersion => Command::Dispersion,
            Cmd::Fractions => Command::Fractions,
            Cmd::Spectrum => Command::Spectrum,
            Cmd::Evolve => Command::Evolve,
            Cmd::Oracle => Command::Oracle,
        }
    }
}

fn execute(args: &Args) -> CliResult<()> {
    if args.plot_script && args.out.is_none() {
        return Err(CliError::Config("--plot-script needs --out".into()));
    }
    let (cfg, source) = match (&args.config, args.preset) {
        (Some(path), _) => (RunConfig::load(path)?, format!("config {}", path.display())),
        (None, Some(Preset::Paper)) => (RunConfig::default(), "preset paper".to_string()),
        (None, None) => return Err(CliError::Config("one of --config or --preset is required".into())),
    };
    let sweep = args.sweep.as_deref().map(Sweep::parse).transpose()?;
    let data = commands::run(args.command.into(), &cfg, sweep, &source)?;
    output::emit(&data, args.out.as_deref(), args.plot_script)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("darkex: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
