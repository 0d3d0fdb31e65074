//! `rlseries`: series arithmetic, generalized Riordan arrays, tangent
//! brackets and the randomized verification suites from the command line.
//!
//! Series, arrays, tangent pairs and operators are passed as JSON, either
//! inline, as `@path`, or as `-` for stdin.

mod args;
mod exec;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use exec::CliError;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match exec::run(&cli) {
        Ok(out) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Failed(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(e @ CliError::Domain(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
