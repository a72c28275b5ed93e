//! The `rindler` command set: `validate`, `spread`, `sweep` and
//! `oracle-check`.
//!
//! Exit codes: 0 ok, 1 configuration or input error, 2 physics-validity
//! failure, 3 oracle mismatch.

mod commands;
mod manifest;
mod table;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::{
    cmd_oracle_check, cmd_spread, cmd_sweep, cmd_validate, oracle_report, validate_rows, OracleReport, OracleRow,
    TimingRow, ValidateRow,
};
pub use manifest::{PointDiagnostics, RunManifest};
pub use table::Table;

use crate::error::Error;

pub const SWEEP_COLUMNS: [&str; 10] = [
    "a_proper_m_per_s2",
    "omega_det_dimensionless",
    "r",
    "eps_R_abs",
    "eps_L_abs",
    "w_env",
    "negativity",
    "log_negativity",
    "validity_ratio",
    "trunc_loss",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Exit {
    Ok = 0,
    Config = 1,
    Validity = 2,
    Oracle = 3,
}

impl Exit {
    pub fn code(self) -> u8 {
        self as u8
    }
}

impl From<&Error> for Exit {
    fn from(e: &Error) -> Self {
        match e {
            Error::ValidityViolation { .. } | Error::TruncationTail { .. } => Exit::Validity,
            _ => Exit::Config,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "rindler", version, about = "Detector-visible polarization entanglement for an accelerated observer")]
pub struct Cli {
    /// Reserved: nothing in this tool is random, so setting it is an error.
    #[arg(long, global = true)]
    pub seedless: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Peaked,
    Brute,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report Ω_det, r and the peaked-detector validity ratio per acceleration.
    Validate {
        config: PathBuf,
        /// Accelerations (m/s²) to check instead of the sweep grid.
        #[arg(long = "accel")]
        accels: Vec<f64>,
        #[arg(long)]
        points: Option<usize>,
    },
    /// Write the Unruh-basis spread of the ↑ photon.
    Spread {
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        points: Option<usize>,
    },
    /// Negativity against proper acceleration.
    Sweep {
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum)]
        engine: Option<EngineArg>,
        #[arg(long)]
        points: Option<usize>,
        /// Bins for the brute-force engine (default: largest `oracle.bins`).
        #[arg(long)]
        bins: Option<usize>,
        /// Force the band-centre `r` in every bin of the brute-force engine.
        #[arg(long)]
        constant_r: bool,
    },
    /// Compare the two engines and print the cost model.
    OracleCheck {
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Conjugate the L-channel capture in the peaked engine (mutation check).
        #[arg(long, hide = true)]
        tamper_l: bool,
    },
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I) -> Exit
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { Exit::Config } else { Exit::Ok };
        }
    };
    if cli.seedless {
        eprintln!("error: --seedless is reserved; this tool uses no randomness");
        return Exit::Config;
    }
    let outcome = match cli.command {
        Command::Validate { config, accels, points } => cmd_validate(&config, &accels, points),
        Command::Spread { config, out, points } => cmd_spread(&config, &out, points),
        Command::Sweep { config, out, engine, points, bins, constant_r } => {
            cmd_sweep(&config, &out, engine, points, bins, constant_r)
        }
        Command::OracleCheck { config, out, tamper_l } => cmd_oracle_check(&config, out.as_deref(), tamper_l),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            Exit::from(&e)
        }
    }
}
