use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use twotrace_cli::{run, Cli, EXIT_INPUT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, code)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(EXIT_INPUT as u8);
            }
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
