use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use cubic_chow::verify::{emit, exit_code, parse_suites, run, Format, RunConfig};

/// Runs exact verification checks over a range of cubic dimensions.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Args {
    #[arg(long)]
    n_min: u32,

    #[arg(long)]
    n_max: u32,

    /// Comma-separated: grassmann, fano, hodge, diagonal, all.
    #[arg(long)]
    suite: String,

    #[arg(long, default_value = "text", value_parser = parse_format)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: cubic_chow::Error| e.to_string())
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let config =
        match parse_suites(&args.suite).and_then(|s| RunConfig::new(args.n_min, args.n_max, s)) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("verify: {e}");
                return ExitCode::from(2);
            }
        };
    let results = run(&config);
    let mut report = emit(&results, args.format);
    if !report.ends_with('\n') {
        report.push('\n');
    }
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &report) {
                eprintln!("verify: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{report}"),
    }
    ExitCode::from(exit_code(&results) as u8)
}
