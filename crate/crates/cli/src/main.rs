//! `mcg`: command-line front end to the mcg-core computations.
//!
//! Exit codes: 0 success, 1 a checked claim fails or an obstruction is
//! found, 2 usage or input error.

mod args;
mod cmd;
mod error;
mod input;
mod output;

use clap::Parser;
use std::process::ExitCode;

use args::{Cli, Command};
use error::CliError;
use mcg_core::SearchBudget;
use output::Outcome;

fn dispatch(cli: &Cli, budget: &SearchBudget) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Sl2z(c) => cmd::sl2z::run(c, budget),
        Command::Twist(c) => cmd::twist::run(c),
        Command::Glue(c) => cmd::glue::run(c),
        Command::Sym(c) => cmd::sym::run(c),
        Command::Orb(c) => cmd::orb::run(c, budget),
        Command::Graph(c) => cmd::graph::run(c, budget),
        Command::Order(c) => cmd::order::run(c),
        Command::Verify(c) => cmd::verify::run(c, budget),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = SearchBudget::from_env().map_err(CliError::from).and_then(|b| dispatch(&cli, &b));
    match result {
        Ok(outcome) => {
            outcome.print(cli.json);
            ExitCode::from(outcome.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
