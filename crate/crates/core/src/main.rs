use std::process::ExitCode;

use alpha_spectra::cli::{output_path, run, thread_limit, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match thread_limit() {
        Ok(Some(n)) => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                eprintln!("error: cannot configure thread pool: {e}");
                return ExitCode::from(2);
            }
        }
        Ok(None) => {}
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    }
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match output_path(&cli) {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", outcome.text),
    }
    ExitCode::from(outcome.exit_code as u8)
}
