use clap::Parser;
use std::io::Write;
use std::process::exit;

use rrcodes_cli::{execute, Cli};

fn main() {
    // RRCODES_THREADS caps the worker pool used for table generation and
    // pairwise verification.
    if let Ok(v) = std::env::var("RRCODES_THREADS") {
        if let Ok(threads) = v.parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }

    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, out.text.as_bytes())
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => std::io::stdout()
                    .write_all(out.text.as_bytes())
                    .map_err(|e| e.to_string()),
            };
            if let Err(msg) = written {
                eprintln!("error: {msg}");
                exit(2);
            }
            exit(out.exit);
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit(2);
        }
    }
}
