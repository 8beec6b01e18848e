mod args;
mod error;
mod render;
mod run;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;
use serde_json::Value;

use args::{Cli, Format};
use error::CliError;

#[derive(Serialize)]
struct RunReport {
    tool: &'static str,
    version: &'static str,
    command: Vec<String>,
    input_digest: String,
    timing_ms: u64,
    result: Value,
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit_error(e: &CliError) -> ExitCode {
    eprintln!("{}", serde_json::to_string_pretty(&e.to_json()).expect("error serializes"));
    ExitCode::from(1)
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => return emit_error(&CliError::new("usage", e.render().to_string().trim_end())),
    };
    let start = Instant::now();
    let mut digest = run::Digest::default();
    let outcome = match run::run(&cli.verb, &mut digest) {
        Ok(o) => o,
        Err(e) => return emit_error(&e),
    };
    match cli.verb.format() {
        Format::Json => {
            let report = RunReport {
                tool: "liecohom",
                version: env!("CARGO_PKG_VERSION"),
                command: argv[1..].to_vec(),
                input_digest: digest.hex(),
                timing_ms: start.elapsed().as_millis() as u64,
                result: outcome.result,
            };
            emit(&format!("{}\n", serde_json::to_string_pretty(&report).expect("report serializes")));
        }
        Format::Table => emit(&outcome.table),
    }
    ExitCode::from(outcome.exit as u8)
}
