//! `kt-hodge`: Hodge numbers of `J_{a,b}` on the Kodaira-Thurston manifold.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 parameter outside the
//! domain, 3 an oracle disagreed with the closed form.

mod args;
mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] kt_hodge::Error),
    #[error("{0}")]
    Mismatch(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Domain(e) if is_usage(e) => 1,
            CliError::Domain(_) => 2,
            CliError::Mismatch(_) => 3,
        }
    }

    fn tag(&self) -> &'static str {
        match self.code() {
            1 => "usage",
            2 => "domain",
            _ => "mismatch",
        }
    }
}

fn is_usage(e: &kt_hodge::Error) -> bool {
    matches!(e, kt_hodge::Error::InvalidRational(_) | kt_hodge::Error::InvalidArgument(_))
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("KT_HODGE_THREADS") else { return Ok(()) };
    let threads: usize = raw
        .parse()
        .map_err(|_| CliError::Usage(format!("KT_HODGE_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    let outcome = commands::execute(&cli.command);
    // A mismatch still produces its report so the offending rows are visible.
    let (report, failure) = match outcome {
        Ok(report) => (report, None),
        Err(commands::Failed { report: Some(report), error }) => (*report, Some(error)),
        Err(commands::Failed { report: None, error }) => return Err(error),
    };
    let text = report.render(cli.format);
    match &cli.output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    failure.map_or(Ok(()), Err)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.tag());
            ExitCode::from(e.code())
        }
    }
}
