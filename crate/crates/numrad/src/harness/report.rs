//! Report serialization: CSV rows with a pinned column set, and JSON
//! mirroring rows plus summary.

use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::harness::sweep::{FuzzReport, ReportMeta, ReportRow};
use crate::inequalities::{CheckParams, CheckResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl ReportFormat {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Some(ReportFormat::Csv),
            "json" => Some(ReportFormat::Json),
            _ => None,
        }
    }

    pub fn from_path(path: &Path) -> Option<Self> {
        path.extension()
            .and_then(|e| e.to_str())
            .and_then(Self::parse)
    }
}

pub const CSV_HEADER: &str = "trial,checker_id,link,dim,class_A,class_B,class_X,r,p,q,alpha,s,n_power,lhs,rhs,slack,satisfied,tolerance,sub_seed";

/// CSV rendering with shortest-round-trip float formatting; byte-identical
/// for identical reports.
pub fn to_csv(report: &FuzzReport) -> String {
    let mut out = String::with_capacity(64 * (report.rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in &report.rows {
        let p = row.result.params.csv_cells();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            row.trial,
            row.result.checker_id,
            row.result.link,
            row.dim,
            row.class_a,
            row.class_b,
            row.class_x,
            p[0],
            p[1],
            p[2],
            p[3],
            p[4],
            p[5],
            row.result.lhs,
            row.result.rhs,
            row.result.slack,
            row.result.satisfied,
            row.result.tolerance,
            row.sub_seed,
        ));
    }
    out
}

pub fn to_json(report: &FuzzReport) -> String {
    serde_json::to_string_pretty(report).expect("report serialization")
}

/// Write the report to `path` in the requested format.
pub fn write_report(report: &FuzzReport, path: &Path, format: ReportFormat) -> Result<()> {
    let body = match format {
        ReportFormat::Csv => to_csv(report),
        ReportFormat::Json => to_json(report),
    };
    let mut file = std::fs::File::create(path)?;
    file.write_all(body.as_bytes())?;
    Ok(())
}

fn parse_f64_opt(cell: &str) -> Result<Option<f64>> {
    if cell.is_empty() {
        return Ok(None);
    }
    cell.parse::<f64>()
        .map(Some)
        .map_err(|e| Error::Parse(format!("bad float '{cell}': {e}")))
}

/// Parse a CSV report back into a `FuzzReport`. Digest and notes are not
/// part of the CSV schema, so those fields come back empty; the summary is
/// recomputed from the rows.
pub fn from_csv(text: &str) -> Result<FuzzReport> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::Parse("empty report".into()))?;
    if header != CSV_HEADER {
        return Err(Error::Parse("unrecognized CSV header".into()));
    }
    let mut rows = Vec::new();
    for (lineno, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != 19 {
            return Err(Error::Parse(format!(
                "line {}: expected 19 cells, found {}",
                lineno + 2,
                cells.len()
            )));
        }
        let parse_u64 = |c: &str, what: &str| {
            c.parse::<u64>()
                .map_err(|e| Error::Parse(format!("bad {what} '{c}': {e}")))
        };
        let parse_f = |c: &str, what: &str| {
            c.parse::<f64>()
                .map_err(|e| Error::Parse(format!("bad {what} '{c}': {e}")))
        };
        let params = CheckParams {
            r: parse_f64_opt(cells[7])?,
            p: parse_f64_opt(cells[8])?,
            q: parse_f64_opt(cells[9])?,
            alpha: parse_f64_opt(cells[10])?,
            s: parse_f64_opt(cells[11])?,
            n_power: if cells[12].is_empty() {
                None
            } else {
                Some(
                    cells[12]
                        .parse::<u32>()
                        .map_err(|e| Error::Parse(format!("bad n_power: {e}")))?,
                )
            },
        };
        let satisfied = match cells[16] {
            "true" => true,
            "false" => false,
            other => return Err(Error::Parse(format!("bad satisfied flag '{other}'"))),
        };
        let lhs = parse_f(cells[13], "lhs")?;
        let rhs = parse_f(cells[14], "rhs")?;
        rows.push(ReportRow {
            trial: parse_u64(cells[0], "trial")?,
            dim: cells[3]
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad dim: {e}")))?,
            class_a: cells[4].to_string(),
            class_b: cells[5].to_string(),
            class_x: cells[6].to_string(),
            sub_seed: parse_u64(cells[18], "sub_seed")?,
            result: CheckResult {
                checker_id: cells[1].to_string(),
                link: cells[2].to_string(),
                params,
                lhs,
                rhs,
                slack: parse_f(cells[15], "slack")?,
                satisfied,
                tolerance: parse_f(cells[17], "tolerance")?,
                operand_digest: String::new(),
                notes: String::new(),
            },
        });
    }
    let summary = FuzzReport::recompute_summary(&rows, &[]);
    let trials = rows.iter().map(|r| r.trial + 1).max().unwrap_or(0);
    Ok(FuzzReport {
        meta: ReportMeta {
            trials,
            dims: Vec::new(),
            seed: 0,
            tol: 0.0,
            checker_filter: None,
        },
        rows,
        summary,
        notes: Vec::new(),
    })
}

/// Read a report file, dispatching on the extension (.csv or .json).
pub fn read_report(path: &Path) -> Result<FuzzReport> {
    let text = std::fs::read_to_string(path)?;
    match ReportFormat::from_path(path) {
        Some(ReportFormat::Json) => {
            serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))
        }
        Some(ReportFormat::Csv) => from_csv(&text),
        None => Err(Error::Parse(
            "unrecognized report extension (expected .csv or .json)".into(),
        )),
    }
}
