//! Command-line front end for `formalode-core`.

pub mod args;
pub mod commands;
pub mod error;
pub mod format;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

use crate::args::Cli;
use crate::error::{exit, CliError};
use crate::format::Report;

fn emit(report: &Report, output: Option<&str>) -> Result<(), CliError> {
    let text = report.to_json();
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(format!("{path}: {e}"))),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("stdout: {e}"))),
    }
}

/// Parses `args`, runs the subcommand and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                exit::PARSE
            } else {
                exit::OK
            };
        }
    };
    let output = commands::output_path(&cli.command);
    let result = commands::run(&cli.command);
    let err = match result {
        Ok(report) => match emit(&report, output) {
            Ok(()) => return exit::OK,
            Err(e) => e,
        },
        Err(CliError::VerificationFailed(report)) => {
            if let Err(e) = emit(&report, output) {
                eprintln!("error: {e}");
                return e.exit_code();
            }
            CliError::VerificationFailed(report)
        }
        Err(e) => e,
    };
    eprintln!("error: {err}");
    err.exit_code()
}
