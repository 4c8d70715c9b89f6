//! `itdom`: invariant reports, theorem verification, catalog generation,
//! counterexample reproduction and extremal searches.
//!
//! Exit codes: 0 success (including expected refutations), 1 an established
//! result was violated, 2 usage or parse error, 3 solver limit exceeded.

mod args;
mod cache;
mod commands;
mod error;
mod input;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use args::{Cli, Command};
use cache::CatalogCache;
use commands::Context;
use error::CliError;

fn run(cli: Cli) -> Result<bool, CliError> {
    let start = Instant::now();
    let g = &cli.global;
    let jobs = g.jobs.map(|j| j as usize).unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    });
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs} workers: {e}")))?;
    let cache = if g.no_cache {
        CatalogCache::new(None)
    } else {
        CatalogCache::new(Some(g.cache_dir.clone().unwrap_or_else(cache::default_dir)))
    };
    let ctx = Context {
        pool,
        cache,
        omega_cap: g.omega_cap,
    };

    let outcome = match &cli.command {
        Command::Invariants { source } => commands::invariants(&ctx, source)?,
        Command::Verify { theorems, source } => commands::verify(&ctx, theorems, source)?,
        Command::Generate { order, all } => {
            let lines = commands::generate(&ctx, *order, *all)?;
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            for line in lines {
                writeln!(out, "{line}").map_err(|e| CliError::Io(e.to_string()))?;
            }
            return Ok(true);
        }
        Command::Counterexamples => commands::counterexamples(&ctx)?,
        Command::Search { mode, order } => commands::search(&ctx, *mode, *order)?,
    };
    let failed = outcome.failed;
    let elapsed = if g.no_timing {
        0
    } else {
        start.elapsed().as_millis() as u64
    };
    let command = std::iter::once("itdom".to_string())
        .chain(std::env::args().skip(1))
        .collect::<Vec<_>>()
        .join(" ");
    report::emit(outcome, g.format, command, elapsed)?;
    Ok(!failed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
