mod args;
mod report;
mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, Format};
use crate::run::Failure;

/// Caps the worker pool; unset means one worker per core.
const THREADS_VAR: &str = "RADSPEC_THREADS";

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var(THREADS_VAR) else { return Ok(()) };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("{THREADS_VAR} must be a positive integer, got '{value}'"))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| e.to_string())
}

fn emit(report: &report::Report, format: Format) -> ExitCode {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if report.write(format, &mut out).and_then(|_| out.flush()).is_err() {
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run::run(&cli.command) {
        Ok((report, format)) => emit(&report, format),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Engine(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(report)) => {
            let format = match &cli.command {
                args::Command::Compare(a) => a.output.format,
                _ => Format::Table,
            };
            emit(&report, format);
            eprintln!("error: some levels exceed the comparison tolerance");
            ExitCode::from(1)
        }
    }
}
