use std::io::Write;

use serde::Serialize;
use serde_json::Value;

use crate::args::Format;
use crate::error::CliError;

/// Top-level JSON document written by every reporting subcommand.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub version: &'static str,
    pub command: String,
    /// Sorted by `graph6`.
    pub entries: Vec<Value>,
    pub summary: Value,
    pub elapsed_ms: u64,
}

/// The CSV rendering of a report.
#[derive(Debug, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

pub struct Outcome {
    pub entries: Vec<(String, Value)>,
    pub summary: Value,
    pub table: Table,
    /// An established result was violated.
    pub failed: bool,
}

/// Sorts `(graph6, entry)` pairs; ties keep their input order.
pub fn sort_entries<T>(entries: &mut [(String, T)]) {
    entries.sort_by(|a, b| a.0.cmp(&b.0));
}

pub fn cell<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn emit(
    outcome: Outcome,
    format: Format,
    command: String,
    elapsed_ms: u64,
) -> Result<(), CliError> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let io = |e: std::io::Error| CliError::Io(format!("writing output: {e}"));
    match format {
        Format::Json => {
            let report = RunReport {
                version: env!("CARGO_PKG_VERSION"),
                command,
                entries: outcome.entries.into_iter().map(|(_, v)| v).collect(),
                summary: outcome.summary,
                elapsed_ms,
            };
            serde_json::to_writer_pretty(&mut out, &report)
                .map_err(|e| CliError::Io(format!("writing output: {e}")))?;
            writeln!(out).map_err(io)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            let err = |e: csv::Error| CliError::Io(format!("writing output: {e}"));
            w.write_record(&outcome.table.header).map_err(err)?;
            for row in &outcome.table.rows {
                w.write_record(row).map_err(err)?;
            }
            w.flush().map_err(io)?;
        }
    }
    Ok(())
}
