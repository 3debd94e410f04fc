mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Format};
use output::{write_output, CliError};

fn run(cli: &Cli) -> Result<bool, CliError> {
    let outcome = commands::dispatch(&cli.command)?;
    let body = outcome.render(cli.format)?;
    write_output(cli.out.as_deref(), &body)?;
    Ok(outcome.pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            if cli.format == Some(Format::Json) {
                eprintln!("{}", e.to_json());
            } else {
                eprintln!("weylzeta: {e}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
