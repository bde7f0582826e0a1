//! `rigidph`: persistence barcodes and terminal-simplex rigidity from the
//! command line.

mod args;
mod commands;
mod report;

use std::process::ExitCode;

use clap::Parser;
use rigidph::ErrorCategory;

use crate::args::Cli;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            if let Some(out) = &failure.report {
                print!("{out}");
            }
            eprintln!("error: {}", failure.message);
            ExitCode::from(exit_code(failure.category))
        }
    }
}

fn exit_code(category: ErrorCategory) -> u8 {
    match category {
        ErrorCategory::Parse => 2,
        ErrorCategory::Validation => 3,
        ErrorCategory::Domain => 4,
        ErrorCategory::Cap => 5,
        ErrorCategory::Internal => 1,
    }
}
