use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = gwalk::cli::Cli::parse();
    match gwalk::cli::run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("gwalk: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
