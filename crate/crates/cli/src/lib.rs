//! Command-line driver: single-deletion verification, seeded scans and
//! grid dumps for plotting.
//!
//! Exit status is 0 when every non-skipped check passes, 1 when a check
//! fails and 2 for usage or configuration errors.

pub mod commands;
pub mod config;
pub mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};

pub use config::{Flags, RunConfig, UsageError};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "pvka", version, about = "Verify Darboux-Crum / Krein-Adler equivalences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact Wronskian identities for one deletion.
    Identity(Flags),
    /// Potential equality on a grid, with an optional CSV dump.
    Potential(Flags),
    /// Schrödinger residuals, orthogonality and norms.
    Spectrum(Flags),
    /// Seeded random identity campaign.
    Scan(Flags),
    /// Every exact and numeric check for one deletion.
    Report(Flags),
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, UsageError> {
    let (label, flags) = match command {
        Command::Identity(f) => ("identity", f),
        Command::Potential(f) => ("potential", f),
        Command::Spectrum(f) => ("spectrum", f),
        Command::Scan(f) => ("scan", f),
        Command::Report(f) => ("report", f),
    };
    let cfg = RunConfig::resolve(flags)?;
    let outcome = match label {
        "identity" => commands::identity(&cfg)?,
        "potential" => commands::potential(&cfg)?,
        "spectrum" => commands::spectrum(&cfg)?,
        "scan" => commands::scan(&cfg)?,
        _ => commands::full_report(&cfg)?,
    };
    output::write_json(cfg.flags.out.as_deref(), &outcome.json, stdout)?;
    let s = outcome.summary;
    let _ = writeln!(stderr, "{label}: {} pass, {} fail, {} skipped", s.pass, s.fail, s.skipped);
    Ok(if s.fail == 0 { EXIT_PASS } else { EXIT_FAIL })
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}
