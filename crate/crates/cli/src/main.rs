//! `sot`: tables, identity sweeps, rotors and trilinear forms from the command line.

mod args;
mod emit;
mod matrices;
mod rotate;
mod table;
mod trilinear;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use emit::Emission;

/// Exit statuses: 0 success, 1 verification failure, 2 usage error.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<sot_core::AlgebraError> for Failure {
    fn from(e: sot_core::AlgebraError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn run(cli: &Cli) -> Result<(Box<dyn Emission>, bool), Failure> {
    let config = cli.config()?;
    match &cli.command {
        Command::Table => Ok((Box::new(table::run()), true)),
        Command::Verify { suite } => {
            let out = verify::run(*suite, &config.with_default_mode(args::Mode::Exact));
            let ok = out.passed;
            Ok((Box::new(out), ok))
        }
        Command::Rotate(a) => {
            let out = rotate::run(a, &config.with_default_mode(args::Mode::Float))?;
            Ok((Box::new(out), true))
        }
        Command::Trilinear(a) => {
            let out = trilinear::run(a, &config.with_default_mode(args::Mode::Float))?;
            Ok((out, true))
        }
        Command::Matrices { which } => {
            Ok((matrices::run(*which, &config.with_default_mode(args::Mode::Exact)), true))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, ok)) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = out.write(cli.format, &mut stdout).and_then(|_| Ok(stdout.flush()?)) {
                // A closed pipe (`sot table | head`) is not an error of ours.
                let broken_pipe = e
                    .chain()
                    .filter_map(|c| c.downcast_ref::<std::io::Error>())
                    .any(|io| io.kind() == std::io::ErrorKind::BrokenPipe);
                if !broken_pipe {
                    eprintln!("sot: {e}");
                    return ExitCode::from(1);
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("sot: verification failed");
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("sot: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("sot: {msg}");
            ExitCode::from(1)
        }
    }
}
