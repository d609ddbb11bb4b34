mod args;
mod report;
mod run;

use std::path::{Path, PathBuf};
use std::sync::mpsc;
use std::time::{Duration, Instant};

use clap::error::ErrorKind;
use clap::Parser;
use sha2::{Digest, Sha256};

use args::{Cli, Format};
use report::{Outcome, RunReport, Status};

fn digest(path: &Path) -> Option<String> {
    let bytes = std::fs::read(path).ok()?;
    Some(format!("{:x}", Sha256::digest(&bytes)))
}

fn emit(report: &RunReport, format: Format) -> ! {
    match format {
        Format::Text => println!("{}", report.text_line()),
        Format::Json | Format::Dot => {
            println!("{}", serde_json::to_string(report).expect("report serializes"))
        }
    }
    std::process::exit(report.status.exit_code())
}

fn error_report(command: Vec<String>, input_digest: Option<String>, start: Instant, msg: String) -> RunReport {
    RunReport {
        command,
        input_digest,
        status: Status::Error,
        witness: None,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
        stats: Default::default(),
        detail: serde_json::json!({}),
        error: Some(msg),
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), String> {
    std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn main() {
    let start = Instant::now();
    let command: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => {
            let msg = e.render().to_string();
            emit(&error_report(command, None, start, msg.trim().to_string()), Format::Json)
        }
    };
    let format = cli.global.format;
    let input = run::input_path(&cli.command, &cli.global);
    let input_digest = input.as_deref().and_then(digest);
    let out_path = run::output_path(&cli.command, &cli.global);

    let limit = cli.global.time_limit;
    if limit.is_some_and(|t| !(t > 0.0 && t.is_finite())) {
        let msg = "--time-limit must be a positive number of seconds".to_string();
        emit(&error_report(command, input_digest, start, msg), format);
    }
    let (tx, rx) = mpsc::channel();
    std::thread::spawn(move || {
        let _ = tx.send(run::execute(&cli.command, &cli.global));
    });
    let result = match limit {
        Some(secs) => match rx.recv_timeout(Duration::from_secs_f64(secs)) {
            Ok(r) => r,
            Err(_) => Err(format!("time limit of {secs} s exceeded")),
        },
        None => rx.recv().unwrap_or_else(|_| Err("solver thread panicked".into())),
    };
    let report = match result.and_then(|o| finish(o, out_path, format)) {
        Ok((o, witness)) => RunReport {
            command,
            input_digest,
            status: o.status,
            witness,
            wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
            stats: o.stats,
            detail: o.detail,
            error: None,
        },
        Err(msg) => error_report(command, input_digest, start, msg),
    };
    emit(&report, format)
}

/// Writes the witness (and drawing) if there is one.
fn finish(o: Outcome, out_path: Option<PathBuf>, format: Format) -> Result<(Outcome, Option<PathBuf>), String> {
    let (Some(text), Some(path)) = (&o.witness, out_path) else {
        return Ok((o, None));
    };
    write_file(&path, text)?;
    if format == Format::Dot {
        if let Some(dot) = &o.dot {
            write_file(&path.with_extension("dot"), dot)?;
        }
    }
    Ok((o, Some(path)))
}
