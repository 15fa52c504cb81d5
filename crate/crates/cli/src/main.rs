use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use flowup_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            eprint!("{}", outcome.stderr);
            let _ = std::io::stdout().flush();
            ExitCode::from(outcome.code)
        }
        Err(err) => {
            eprintln!("flowup: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
