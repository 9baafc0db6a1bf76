//! `toa`: arrival-time distributions for a free Gaussian wave packet.
//!
//! Exit codes: 0 success, 1 computation/IO failure or failed validation,
//! 2 configuration problem, 3 resolution refusal (phase under-resolved on
//! the requested grid).

mod commands;
mod config;

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use config::{FileConfig, Overrides, ARRIVAL_TIMES, SLICE_TIMES};

#[derive(Debug)]
pub enum CliError {
    /// Bad inputs: rejected before any physics runs. Exit 2.
    Config(String),
    /// The requested grid cannot resolve the projection phase. Exit 3.
    Underresolved(String),
    /// Everything else: numerical failure, IO failure. Exit 1.
    Failure(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(msg) | CliError::Underresolved(msg) | CliError::Failure(msg) => {
                f.write_str(msg)
            }
        }
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Underresolved(_) => 3,
            CliError::Failure(_) => 1,
        }
    }
}

impl From<toa_core::Error> for CliError {
    fn from(e: toa_core::Error) -> Self {
        match e {
            toa_core::Error::PhaseUnderresolved { .. } => CliError::Underresolved(e.to_string()),
            other => CliError::Failure(other.to_string()),
        }
    }
}

/// Arrival-time distributions for a free Gaussian wave packet.
#[derive(Debug, Parser)]
#[command(name = "toa", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: CommonFlags,
}

/// Options shared by every subcommand. Flags override the config file,
/// which overrides built-in defaults.
#[derive(Debug, Args)]
struct CommonFlags {
    /// Initial packet center position
    #[arg(long, global = true, allow_negative_numbers = true)]
    x0: Option<f64>,
    /// Packet mean momentum (in units of 1/length)
    #[arg(long, global = true, allow_negative_numbers = true)]
    k0: Option<f64>,
    /// Packet position spread
    #[arg(long, global = true)]
    delta: Option<f64>,
    /// Reduced Planck constant
    #[arg(long, global = true)]
    hbar: Option<f64>,
    /// Particle mass
    #[arg(long, global = true)]
    mass: Option<f64>,
    /// Low-momentum regulator scale
    #[arg(long, global = true)]
    epsilon: Option<f64>,
    /// Momentum grid lower edge (defaults to packet support)
    #[arg(long = "kmin", global = true, allow_negative_numbers = true)]
    k_min: Option<f64>,
    /// Momentum grid upper edge (defaults to packet support)
    #[arg(long = "kmax", global = true, allow_negative_numbers = true)]
    k_max: Option<f64>,
    /// Momentum grid size
    #[arg(long = "nk", global = true)]
    n_k: Option<usize>,
    /// Time sweep start
    #[arg(long = "tmin", global = true, allow_negative_numbers = true)]
    t_min: Option<f64>,
    /// Time sweep end
    #[arg(long = "tmax", global = true, allow_negative_numbers = true)]
    t_max: Option<f64>,
    /// Number of time samples
    #[arg(long = "nt", global = true)]
    n_t: Option<usize>,
    /// Detector positions, comma separated
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    detectors: Option<Vec<f64>>,
    /// JSON configuration file (lines starting with # are comments)
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Write output here instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Directional arrival-time densities π±(T) at each detector
    Density,
    /// Position-space probability density snapshots |ψ(x,t)|²
    PositionDensity,
    /// Probability current vs. arrival densities at one detector
    CurrentCompare {
        /// Averaging window for the smoothed discrepancy column
        #[arg(long, allow_negative_numbers = true)]
        window: Option<f64>,
    },
    /// Time–energy uncertainty report (JSON) at the first detector
    Uncertainty,
    /// Run internal consistency checks
    Validate {
        /// List check names without running anything
        #[arg(long)]
        list: bool,
    },
}

impl CommonFlags {
    fn overrides(&self, window: Option<f64>) -> Overrides {
        Overrides {
            x0: self.x0,
            k0: self.k0,
            delta: self.delta,
            hbar: self.hbar,
            mass: self.mass,
            epsilon: self.epsilon,
            k_min: self.k_min,
            k_max: self.k_max,
            n_k: self.n_k,
            t_min: self.t_min,
            t_max: self.t_max,
            n_t: self.n_t,
            detectors: self.detectors.clone(),
            window,
        }
    }
}

fn emit(output: Option<&PathBuf>, content: &str) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Failure(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    // Listing checks needs no configuration at all.
    if let Command::Validate { list: true } = cli.command {
        let (report, _) = commands::cmd_validate_list();
        emit(cli.common.output.as_ref(), &report)?;
        return Ok(0);
    }

    let file = match &cli.common.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let window = match cli.command {
        Command::CurrentCompare { window } => window,
        _ => None,
    };
    let time_defaults = match cli.command {
        Command::PositionDensity => SLICE_TIMES,
        _ => ARRIVAL_TIMES,
    };
    let run = config::resolve(&file, &cli.common.overrides(window), time_defaults)?;

    let (content, code) = match cli.command {
        Command::Density => (commands::cmd_density(&run)?, 0),
        Command::PositionDensity => (commands::cmd_position_density(&run)?, 0),
        Command::CurrentCompare { .. } => (commands::cmd_current_compare(&run)?, 0),
        Command::Uncertainty => (commands::cmd_uncertainty(&run)?, 0),
        Command::Validate { .. } => {
            let (report, all_passed) = commands::cmd_validate(&run)?;
            (report, if all_passed { 0 } else { 1 })
        }
    };
    emit(cli.common.output.as_ref(), &content)?;
    Ok(code)
}

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}
