use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use zkmorse::cli::{init_threads, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = init_threads().and_then(|()| run(&cli));
    match result {
        Ok(out) => {
            print!("{}", out.text);
            let _ = std::io::stdout().flush();
            ExitCode::from(out.status.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("zkmorse: {e}");
            ExitCode::from(1)
        }
    }
}
