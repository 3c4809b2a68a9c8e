//! `sppgreen`: tables of surface-plasmon dispersion, dipole field maps,
//! sweeps, photon-correlation curves and closed-form-vs-oracle validation for
//! a planar dielectric/metal interface.
//!
//! Every command writes one `#` comment line (version, convention tag,
//! effective configuration) followed by a CSV/TSV table to stdout or `--out`.
//! Exit status: 0 success, 1 usage or I/O error, 2 numerical failure,
//! 3 validation tolerance exceeded.

mod commands;
mod config;
mod table;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use spp_green::emitters::CONVENTION_TAG;

use crate::commands::SweepMode;
use crate::config::RunConfig;
use crate::table::Format;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("{0} validation case(s) exceeded their tolerance")]
    Tolerance(usize),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Numerical(_) => 2,
            CliError::Tolerance(_) => 3,
        }
    }
}

const AFTER_HELP: &str = "\
Units: lengths in nm, energies in eV, times in s, frequencies in rad/s.
Conversions: omega = 2 pi c / lambda, c = 299792458 m/s, hbar = 6.582119569e-16 eV s,
mu0 = 1.25663706212e-6 H/m, 1 debye = 3.33564e-30 C m.
Exit status: 0 ok, 1 usage/io, 2 numerical failure, 3 validation tolerance exceeded.
Precedence: defaults < --config file < --set KEY=VALUE < dedicated flags.";

#[derive(Debug, Parser)]
#[command(name = "sppgreen", version, about = "Surface-plasmon Green's tensor tables", after_help = AFTER_HELP)]
struct Cli {
    /// Config file of `key = value` lines.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output file (default: stdout).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Override any config key; repeatable.
    #[arg(long = "set", value_name = "KEY=VALUE", global = true)]
    set: Vec<String>,
    /// Wavelengths, nm: `a,b,c` or `start:stop:count`.
    #[arg(long, global = true)]
    lambda_nm: Option<String>,
    /// Source/emitter heights, nm.
    #[arg(long, global = true)]
    z0_nm: Option<String>,
    /// Dipole antenna orientation (x or z).
    #[arg(long, global = true)]
    orientation: Option<String>,
    /// Add free-space columns and the intensity ratio to field maps.
    #[arg(long, global = true)]
    relative: bool,
    /// Sampling time in s (default: envelope peak).
    #[arg(long, global = true)]
    time: Option<f64>,
    /// Quadrature relative tolerance.
    #[arg(long, global = true)]
    quad_rtol: Option<f64>,
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// SPP wavevector, propagation and confinement lengths per wavelength.
    Dispersion,
    /// Real SPP field of the dipole antenna on an x/y/z grid.
    FieldMap,
    /// Enhancement |E|^2/|E0|^2 for z and x antennas along one parameter.
    Sweep {
        #[arg(long, value_enum)]
        mode: Option<SweepMode>,
    },
    /// Second-order correlation curves of a resonantly driven emitter.
    G2 {
        /// Rabi frequency, rad/s.
        #[arg(long, conflicts_with = "rabi_per_gamma")]
        rabi_rad_s: Option<f64>,
        /// Rabi frequency in units of the decay rate.
        #[arg(long)]
        rabi_per_gamma: Option<f64>,
    },
    /// Closed-form tensor vs Sommerfeld oracle, and reciprocity.
    Validate,
    /// List configuration keys with defaults.
    Keys,
}

fn build_config(cli: &Cli) -> Result<RunConfig, CliError> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &cli.config {
        cfg.load_file(path)?;
    }
    for a in &cli.set {
        cfg.assign(a)?;
    }
    let mut flag = |key: &str, value: Option<String>| -> Result<(), CliError> {
        match value {
            Some(v) => cfg.set(key, &v),
            None => Ok(()),
        }
    };
    flag("geometry.lambda_nm", cli.lambda_nm.clone())?;
    flag("geometry.z0_nm", cli.z0_nm.clone())?;
    flag("source.orientation", cli.orientation.clone())?;
    flag("source.time_s", cli.time.map(|t| t.to_string()))?;
    flag("quad.rtol", cli.quad_rtol.map(|t| t.to_string()))?;
    flag("output.format", cli.format.map(|f| if f == Format::Csv { "csv" } else { "tsv" }.to_string()))?;
    flag("output.relative", cli.relative.then(|| "true".to_string()))?;
    match &cli.command {
        Command::Sweep { mode } => flag("sweep.mode", mode.map(|m| m.label().to_string()))?,
        Command::G2 { rabi_rad_s, rabi_per_gamma } => {
            if let Some(v) = rabi_rad_s {
                cfg.set("emitter.rabi_rad_s", &v.to_string())?;
                cfg.set("emitter.rabi_per_gamma", "")?;
            }
            if let Some(v) = rabi_per_gamma {
                cfg.set("emitter.rabi_per_gamma", &v.to_string())?;
                cfg.set("emitter.rabi_rad_s", "")?;
            }
        }
        _ => {}
    }
    Ok(cfg)
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Command::Keys = cli.command {
        print!("{}", config::describe_keys());
        return Ok(());
    }
    let cfg = build_config(&cli)?;
    let format = Format::parse(cfg.raw("output.format"))?;
    let (name, report) = match cli.command {
        Command::Dispersion => ("dispersion", commands::dispersion(&cfg)?),
        Command::FieldMap => ("field-map", commands::field_map(&cfg)?),
        Command::Sweep { .. } => ("sweep", commands::sweep(&cfg)?),
        Command::G2 { .. } => ("g2", commands::g2_curves(&cfg)?),
        Command::Validate => ("validate", commands::validate(&cfg)?),
        Command::Keys => unreachable!("handled above"),
    };
    let comment = format!(
        "sppgreen {} | command={name} | convention={CONVENTION_TAG} | config: {}",
        env!("CARGO_PKG_VERSION"),
        cfg.echo()
    );
    match &cli.out {
        Some(path) => {
            let file = File::create(path).map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            report.table.write(&mut w, format, &comment)?;
            w.flush()?;
        }
        None => report.table.write(io::stdout().lock(), format, &comment)?,
    }
    match report.failure {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sppgreen: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
