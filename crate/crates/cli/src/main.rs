//! `kappa` command-line tool.
//!
//! Exit codes: 0 success, 2 usage or domain error, 3 numerical failure.

mod cli;
mod commands;
mod error;
mod format;
mod output;

use std::process::ExitCode;

use clap::Parser;

use cli::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eval(a) => commands::eval(a),
        Command::Solve(a) => commands::solve_cmd(a),
        Command::Series(a) => commands::series(a),
        Command::Compare(a) => commands::compare(a),
        Command::SlopeField(a) => commands::slope_field_cmd(a),
        Command::Logistic(a) => commands::logistic(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
