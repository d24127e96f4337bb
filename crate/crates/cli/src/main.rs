use std::process::ExitCode;

use clap::Parser;

use polytile_cli::{run, Cli};

fn main() -> ExitCode {
    // clap uses 2 for usage errors, which here means "not tileable"
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Ok(v) = std::env::var("POLYTILE_THREADS") {
        match v.trim().parse::<usize>() {
            Ok(n) => {
                // 0 leaves the choice to rayon
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
            Err(_) => {
                eprintln!("error: POLYTILE_THREADS must be a number, got '{v}'");
                return ExitCode::from(1);
            }
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
