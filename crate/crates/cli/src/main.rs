mod args;
mod commands;

use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;

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
    let start = Instant::now();
    match commands::run(&cli) {
        Ok(mut report) => {
            if cli.timings {
                report.add_timing(start.elapsed());
            }
            report.print(cli.json);
            if report.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let precondition = matches!(
                e.downcast_ref::<mincodes::Error>(),
                Some(mincodes::Error::PreconditionFailed(_))
            );
            ExitCode::from(if precondition { 2 } else { 1 })
        }
    }
}
