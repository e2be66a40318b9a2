//! Command-line front door. Subcommands: radius, range, check, fuzz,
//! summarize. Flags only, no config files; numeric stdout uses full
//! round-trip precision (17 significant digits).
//!
//! Exit codes: 0 success / all satisfied; 1 violation found; 2 bad input,
//! failed precondition, or invalid configuration.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::error::Error;
use crate::harness::rng::{random_unit_vector, RngStream};
use crate::harness::{read_report, run_sweep, write_report, FuzzConfig, FuzzReport, ReportFormat};
use crate::inequalities::{check, lookup, CheckParams, Operands};
use crate::linalg::ComplexMatrix;
use crate::numrange::{numerical_radius, numerical_range_boundary};
use num_complex::Complex64;

const USAGE: &str = "\
numrad — numerical-range laboratory

USAGE:
  numrad radius <matrix.json> [--tol 1e-8]
  numrad range <matrix.json> [--points 360] [--out boundary.csv]
  numrad check --id <R01..R26|alias> --A <matrix.json> [--B f] [--X f]
               [--r v] [--p v] [--q v] [--alpha v] [--s v] [--n-power k]
               [--tol 1e-8] [--seed 0] [--dim n]
  numrad fuzz [--trials 1000] [--dims 2,3,4,5,6,8,12,16] [--seed 42]
              [--out fuzz_report.csv] [--format csv|json]
              [--checkers R01,R05,...] [--tol 1e-8]
  numrad summarize <report.csv|report.json>

The environment variable NUMRAD_THREADS caps fuzz parallelism (default:
machine parallelism); it never changes report contents.";

/// Parse and dispatch; returns the process exit code.
pub fn run(args: &[String]) -> i32 {
    match dispatch(args) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(args: &[String]) -> Result<i32, Error> {
    let Some(cmd) = args.first() else {
        eprintln!("{USAGE}");
        return Ok(2);
    };
    let rest = &args[1..];
    match cmd.as_str() {
        "radius" => cmd_radius(rest),
        "range" => cmd_range(rest),
        "check" => cmd_check(rest),
        "fuzz" => cmd_fuzz(rest),
        "summarize" => cmd_summarize(rest),
        "--help" | "-h" | "help" => {
            println!("{USAGE}");
            Ok(0)
        }
        other => {
            eprintln!("error: unknown subcommand '{other}'");
            eprintln!("{USAGE}");
            Ok(2)
        }
    }
}

struct Parsed {
    positionals: Vec<String>,
    flags: BTreeMap<String, String>,
}

/// Flags take exactly one value (`--key value` or `--key=value`); unknown
/// flags are rejected.
fn parse_flags(args: &[String], allowed: &[&str]) -> Result<Parsed, Error> {
    let mut positionals = Vec::new();
    let mut flags = BTreeMap::new();
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        if let Some(stripped) = arg.strip_prefix("--") {
            let (key, value) = match stripped.split_once('=') {
                Some((k, v)) => (k.to_string(), v.to_string()),
                None => {
                    let v = it
                        .next()
                        .ok_or_else(|| Error::Parse(format!("flag --{stripped} needs a value")))?;
                    (stripped.to_string(), v.clone())
                }
            };
            if !allowed.contains(&key.as_str()) {
                return Err(Error::Parse(format!("unknown flag --{key}")));
            }
            flags.insert(key, value);
        } else {
            positionals.push(arg.clone());
        }
    }
    Ok(Parsed { positionals, flags })
}

fn flag_f64(p: &Parsed, key: &str, default: f64) -> Result<f64, Error> {
    match p.flags.get(key) {
        Some(v) => v
            .parse::<f64>()
            .map_err(|e| Error::Parse(format!("--{key}: {e}"))),
        None => Ok(default),
    }
}

fn flag_f64_opt(p: &Parsed, key: &str) -> Result<Option<f64>, Error> {
    match p.flags.get(key) {
        Some(v) => v
            .parse::<f64>()
            .map(Some)
            .map_err(|e| Error::Parse(format!("--{key}: {e}"))),
        None => Ok(None),
    }
}

fn flag_u64(p: &Parsed, key: &str, default: u64) -> Result<u64, Error> {
    match p.flags.get(key) {
        Some(v) => v
            .parse::<u64>()
            .map_err(|e| Error::Parse(format!("--{key}: {e}"))),
        None => Ok(default),
    }
}

fn load_matrix(path: &str) -> Result<ComplexMatrix, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
    ComplexMatrix::from_json(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

fn cmd_radius(args: &[String]) -> Result<i32, Error> {
    let p = parse_flags(args, &["tol"])?;
    let [file] = p.positionals.as_slice() else {
        return Err(Error::Parse("radius expects one matrix file".into()));
    };
    let tol = flag_f64(&p, "tol", 1e-8)?;
    let m = load_matrix(file)?;
    let est = numerical_radius(&m, tol)?;
    println!(
        "w = {:.16e} ± {:.16e} at theta = {:.16e}",
        est.value, est.certified_error, est.theta_star
    );
    Ok(0)
}

fn cmd_range(args: &[String]) -> Result<i32, Error> {
    let p = parse_flags(args, &["points", "out"])?;
    let [file] = p.positionals.as_slice() else {
        return Err(Error::Parse("range expects one matrix file".into()));
    };
    let points = flag_u64(&p, "points", 360)? as usize;
    let m = load_matrix(file)?;
    let boundary = numerical_range_boundary(&m, points)?;
    let mut csv = String::from("theta,re,im\n");
    for bp in &boundary {
        csv.push_str(&format!("{},{},{}\n", bp.theta, bp.point.re, bp.point.im));
    }
    match p.flags.get("out") {
        Some(path) => std::fs::write(path, csv)?,
        None => print!("{csv}"),
    }
    Ok(0)
}

fn cmd_check(args: &[String]) -> Result<i32, Error> {
    let p = parse_flags(
        args,
        &["id", "A", "B", "X", "r", "p", "q", "alpha", "s", "n-power", "tol", "seed", "dim"],
    )?;
    if !p.positionals.is_empty() {
        return Err(Error::Parse("check takes flags only".into()));
    }
    let id = p
        .flags
        .get("id")
        .ok_or_else(|| Error::Parse("--id is required".into()))?;
    let def = lookup(id).ok_or_else(|| Error::UnknownChecker { id: id.clone() })?;
    let tol = flag_f64(&p, "tol", 1e-8)?;
    let seed = flag_u64(&p, "seed", 0)?;

    let mut ops = Operands::default();
    if let Some(f) = p.flags.get("A") {
        ops.a = Some(load_matrix(f)?);
    }
    if let Some(f) = p.flags.get("B") {
        ops.b = Some(load_matrix(f)?);
    }
    if let Some(f) = p.flags.get("X") {
        ops.x = Some(load_matrix(f)?);
    }
    let dim = ops
        .a
        .as_ref()
        .or(ops.x.as_ref())
        .or(ops.b.as_ref())
        .map(|m| m.dim())
        .or_else(|| {
            p.flags
                .get("dim")
                .and_then(|v| v.parse::<usize>().ok())
        })
        .unwrap_or(4);

    // vector and scalar operands are derived from the seed
    let mut stream = RngStream::new(seed);
    ops.unit_x = Some(random_unit_vector(dim, &mut stream));
    ops.unit_y = Some(random_unit_vector(dim, &mut stream));
    ops.unit_e = Some(random_unit_vector(dim, &mut stream));
    let scale = |s: &mut RngStream| Complex64::new(s.next_gaussian(), s.next_gaussian());
    ops.vec_a = Some(random_unit_vector(dim, &mut stream).scale(scale(&mut stream)));
    ops.vec_b = Some(random_unit_vector(dim, &mut stream).scale(scale(&mut stream)));
    ops.scalar_a = Some(stream.next_gaussian().abs() * 10f64.powf(stream.next_range(-2.0, 2.0)));
    ops.scalar_b = Some(stream.next_gaussian().abs() * 10f64.powf(stream.next_range(-2.0, 2.0)));

    let params = CheckParams {
        r: flag_f64_opt(&p, "r")?,
        p: flag_f64_opt(&p, "p")?,
        q: flag_f64_opt(&p, "q")?,
        alpha: flag_f64_opt(&p, "alpha")?,
        s: flag_f64_opt(&p, "s")?,
        n_power: match p.flags.get("n-power") {
            Some(v) => Some(
                v.parse::<u32>()
                    .map_err(|e| Error::Parse(format!("--n-power: {e}")))?,
            ),
            None => None,
        },
    };

    let results = check(def.id, &ops, &params, tol)?;
    let mut any_violated = false;
    for r in &results {
        let verdict = if r.satisfied { "OK" } else { "VIOLATION" };
        println!(
            "{} lhs={:.16e} rhs={:.16e} slack={:.16e} {}",
            r.display_id(),
            r.lhs,
            r.rhs,
            r.slack,
            verdict
        );
        if !r.notes.is_empty() {
            println!("  note: {}", r.notes);
        }
        any_violated |= !r.satisfied;
    }
    Ok(if any_violated { 1 } else { 0 })
}

fn parse_dims(text: &str) -> Result<Vec<usize>, Error> {
    let mut dims = Vec::new();
    for item in text.split(',') {
        if let Some((lo, hi)) = item.split_once('-') {
            let lo: usize = lo
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("--dims: {e}")))?;
            let hi: usize = hi
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("--dims: {e}")))?;
            if lo > hi {
                return Err(Error::Parse(format!("--dims: empty range {item}")));
            }
            dims.extend(lo..=hi);
        } else {
            dims.push(
                item.trim()
                    .parse()
                    .map_err(|e| Error::Parse(format!("--dims: {e}")))?,
            );
        }
    }
    Ok(dims)
}

fn print_summary_table(report: &FuzzReport) {
    println!(
        "{:<8} {:>7} {:>24} {:>24} {:>10} {:>10} {:>8}",
        "checker", "count", "min_slack", "median_slack", "violations", "info_fail", "skipped"
    );
    for (id, s) in &report.summary {
        println!(
            "{:<8} {:>7} {:>24.16e} {:>24.16e} {:>10} {:>10} {:>8}",
            id, s.count, s.min_slack, s.median_slack, s.violations, s.informational_failures, s.skipped
        );
    }
    let violations = report.violations();
    let informational: u64 = report
        .summary
        .values()
        .map(|s| s.informational_failures)
        .sum();
    println!("total violations (asserted entries): {violations}");
    if informational > 0 {
        println!("informational failures (refuted/printed variants, not gated): {informational}");
    }
}

fn cmd_fuzz(args: &[String]) -> Result<i32, Error> {
    let p = parse_flags(
        args,
        &["trials", "dims", "seed", "out", "format", "checkers", "tol"],
    )?;
    if !p.positionals.is_empty() {
        return Err(Error::Parse("fuzz takes flags only".into()));
    }
    let mut config = FuzzConfig {
        trials: flag_u64(&p, "trials", 1000)?,
        seed: flag_u64(&p, "seed", 42)?,
        tol: flag_f64(&p, "tol", 1e-8)?,
        ..FuzzConfig::default()
    };
    if let Some(dims) = p.flags.get("dims") {
        config.dims = parse_dims(dims)?;
    }
    if let Some(filter) = p.flags.get("checkers") {
        let ids: Vec<String> = filter.split(',').map(|s| s.trim().to_string()).collect();
        for id in &ids {
            if lookup(id).is_none() {
                return Err(Error::UnknownChecker { id: id.clone() });
            }
        }
        config.checker_filter = Some(ids);
    }
    config.validate()?;

    let out = p
        .flags
        .get("out")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("fuzz_report.csv"));
    let format = match p.flags.get("format") {
        Some(f) => ReportFormat::parse(f)
            .ok_or_else(|| Error::Parse(format!("unknown format '{f}' (csv|json)")))?,
        None => ReportFormat::from_path(&out).unwrap_or(ReportFormat::Csv),
    };

    let report = run_sweep(&config)?;
    write_report(&report, &out, format)?;
    println!(
        "wrote {} rows to {} ({} trials, seed {})",
        report.rows.len(),
        out.display(),
        config.trials,
        config.seed
    );
    print_summary_table(&report);
    Ok(if report.violations() == 0 { 0 } else { 1 })
}

fn cmd_summarize(args: &[String]) -> Result<i32, Error> {
    let p = parse_flags(args, &[])?;
    let [file] = p.positionals.as_slice() else {
        return Err(Error::Parse("summarize expects one report file".into()));
    };
    let report = read_report(Path::new(file))?;
    println!("report: {} rows, {} trials", report.rows.len(), report.meta.trials);
    print_summary_table(&report);
    Ok(if report.violations() == 0 { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_parser_accepts_lists_and_ranges() {
        assert_eq!(parse_dims("2,3,8").unwrap(), vec![2, 3, 8]);
        assert_eq!(parse_dims("2-5").unwrap(), vec![2, 3, 4, 5]);
        assert_eq!(parse_dims("2-3,8").unwrap(), vec![2, 3, 8]);
        assert!(parse_dims("5-2").is_err());
        assert!(parse_dims("x").is_err());
    }

    #[test]
    fn unknown_flags_rejected() {
        let args: Vec<String> = vec!["--bogus".into(), "1".into()];
        assert!(parse_flags(&args, &["tol"]).is_err());
        let args: Vec<String> = vec!["--tol=1e-6".into()];
        let p = parse_flags(&args, &["tol"]).unwrap();
        assert_eq!(p.flags["tol"], "1e-6");
    }
}
