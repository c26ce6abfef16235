//! `modpoly`: reduce Coxeter and Möbius groups modulo primes and ideals.

use std::process::ExitCode;

use clap::Parser;
use modpoly::args::{Cli, Command};
use modpoly::{atlas, output, run};

fn dispatch(cli: &Cli) -> anyhow::Result<()> {
    match &cli.command {
        Command::Reduce(job) => run::run_group(job, false),
        Command::Hemi(job) => run::run_group(job, true),
        Command::Verify(job) => run::run_verify(job),
        Command::Mobius(job) => run::run_mobius(job),
        Command::Atlas(job) => {
            let rows = atlas::run_atlas(job)?;
            let mut sink = output::Sink::open(job.common.out.as_deref())?;
            atlas::write_atlas(&rows, job.common.format, &mut sink)?;
            sink.finish()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(run::exit_code(&e))
        }
    }
}
