use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use holoent_cli::{run_command, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Computation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let scan = run_command(&cli.command)?;
    let text = scan.emit_csv(cli.header_comments);
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Computation(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Computation(format!("cannot write stdout: {e}")))
        }
    }
}
