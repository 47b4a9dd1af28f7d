use std::io::Write;

use clap::Parser;
use ldt_core::cli::{run, Cli, RunConfig};

fn main() {
    let config = RunConfig::from_cli(Cli::parse());
    let outcome = run(&config);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(outcome.status);
}
