use std::process::ExitCode;

use clap::Parser;
use conecenter_cli::{run, Cli, CliError};

fn write_output(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|report| {
        write_output(&cli, &report.text)?;
        if report.failed {
            Err(CliError::Compute("one or more checks failed".into()))
        } else {
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("conecenter: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
