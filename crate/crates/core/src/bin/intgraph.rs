use std::io::{Read, Write};
use std::process::ExitCode;

use clap::Parser;
use intgraph::cli::{run, CliConfig, EXIT_INPUT};

fn main() -> ExitCode {
    let config = CliConfig::parse();
    let mut input = Vec::new();
    if config.needs_input() {
        let read = match &config.input {
            Some(path) => std::fs::read(path).map(|bytes| input = bytes),
            None => std::io::stdin().read_to_end(&mut input).map(|_| ()),
        };
        if let Err(e) = read {
            eprintln!("error: cannot read input: {e}");
            return ExitCode::from(EXIT_INPUT as u8);
        }
    }
    let outcome = run(&config, &input);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
