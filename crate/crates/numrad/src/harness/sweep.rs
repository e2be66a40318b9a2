//! Parameter sweeps over the checker registry with seeded operand
//! generation. Trials are independent: each one derives its own sub-stream
//! from (seed, trial), so parallel and serial runs produce identical
//! reports.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harness::generate::{class_certified, generate, OperatorClass};
use crate::harness::rng::{random_unit_vector, RngStream};
use crate::inequalities::{check_all, is_gating, CheckResult, Operands, ParamGrid};
use crate::linalg::classify;

/// Class assignment for the three matrix slots of one trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCombo {
    pub a: OperatorClass,
    pub b: OperatorClass,
    pub x: OperatorClass,
}

/// Default rotation of class combos. Every generator class appears, and the
/// hypothesis classes of each registry entry recur often enough that the
/// default sweep exercises every entry at least 100 times.
pub fn default_class_combos() -> Vec<ClassCombo> {
    use OperatorClass::*;
    let combo = |a, b, x| ClassCombo { a, b, x };
    vec![
        combo(Ginibre, Ginibre, Ginibre),
        combo(Psd, Psd, Ginibre),
        combo(Hermitian, Hermitian, Hermitian),
        combo(Normal, Normal, Ginibre),
        combo(PsdInvertible, PsdInvertible, Contraction),
        combo(Unitary, Unitary, Ginibre),
        combo(Nilpotent, Nilpotent, Ginibre),
        combo(HermitianInvertible, HermitianInvertible, Hermitian),
        combo(RankDeficient, RankDeficient, Contraction),
        combo(HermitianInvertible, HermitianInvertible, Ginibre),
    ]
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub trials: u64,
    pub dims: Vec<usize>,
    pub classes: Vec<ClassCombo>,
    pub param_grid: ParamGrid,
    pub seed: u64,
    /// Relative verdict tolerance handed to the checkers.
    pub tol: f64,
    pub checker_filter: Option<Vec<String>>,
    /// Worker-thread override; `None` consults NUMRAD_THREADS, then the
    /// machine parallelism. Has no effect on the report contents.
    #[serde(skip)]
    pub threads: Option<usize>,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        Self {
            trials: 1000,
            dims: vec![2, 3, 4, 5, 6, 8, 12, 16],
            classes: default_class_combos(),
            param_grid: ParamGrid::default(),
            seed: 42,
            tol: 1e-8,
            checker_filter: None,
            threads: None,
        }
    }
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::InvalidConfig("trials must be >= 1".into()));
        }
        if self.dims.is_empty() || self.dims.contains(&0) {
            return Err(Error::InvalidConfig(
                "dims must be nonempty with every entry >= 1".into(),
            ));
        }
        if self.classes.is_empty() {
            return Err(Error::InvalidConfig("classes must be nonempty".into()));
        }
        if self.param_grid.is_empty() {
            return Err(Error::InvalidConfig("parameter grid must be nonempty".into()));
        }
        if !self.tol.is_finite() || self.tol <= 0.0 {
            return Err(Error::InvalidConfig("tolerance must be positive".into()));
        }
        Ok(())
    }
}

/// One report row: a check result plus its trial metadata.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportRow {
    pub trial: u64,
    pub dim: usize,
    pub class_a: String,
    pub class_b: String,
    pub class_x: String,
    pub sub_seed: u64,
    #[serde(flatten)]
    pub result: CheckResult,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct CheckerSummary {
    pub count: u64,
    pub min_slack: f64,
    pub median_slack: f64,
    /// Failures of asserted links only; these gate exit codes.
    pub violations: u64,
    /// Failures of refuted or informational links, reported but not gated.
    pub informational_failures: u64,
    pub skipped: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportMeta {
    pub trials: u64,
    pub dims: Vec<usize>,
    pub seed: u64,
    pub tol: f64,
    pub checker_filter: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FuzzReport {
    pub meta: ReportMeta,
    pub rows: Vec<ReportRow>,
    pub summary: BTreeMap<String, CheckerSummary>,
    /// Skip and abort notes, ordered by trial.
    pub notes: Vec<String>,
}

impl FuzzReport {
    /// Violation count across asserted links.
    pub fn violations(&self) -> u64 {
        self.summary.values().map(|s| s.violations).sum()
    }

    pub fn recompute_summary(rows: &[ReportRow], notes: &[String]) -> BTreeMap<String, CheckerSummary> {
        let mut slacks: BTreeMap<String, Vec<f64>> = BTreeMap::new();
        let mut summary: BTreeMap<String, CheckerSummary> = BTreeMap::new();
        for row in rows {
            let entry = summary.entry(row.result.checker_id.clone()).or_default();
            entry.count += 1;
            if !row.result.satisfied {
                if is_gating(&row.result.checker_id, &row.result.link) {
                    entry.violations += 1;
                } else {
                    entry.informational_failures += 1;
                }
            }
            slacks
                .entry(row.result.checker_id.clone())
                .or_default()
                .push(row.result.slack);
        }
        for (id, mut values) in slacks {
            values.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let entry = summary.get_mut(&id).expect("id present");
            entry.min_slack = values[0];
            let mid = values.len() / 2;
            entry.median_slack = if values.len() % 2 == 1 {
                values[mid]
            } else {
                0.5 * (values[mid - 1] + values[mid])
            };
        }
        for note in notes {
            if let Some(id) = note.split(['[', ':']).next() {
                if let Some(entry) = summary.get_mut(id) {
                    entry.skipped += 1;
                } else if crate::inequalities::lookup(id).is_some() {
                    summary.entry(id.to_string()).or_default().skipped += 1;
                }
            }
        }
        summary
    }
}

struct TrialOutcome {
    rows: Vec<ReportRow>,
    notes: Vec<String>,
}

fn run_trial(config: &FuzzConfig, trial: u64) -> TrialOutcome {
    let sub_seed = {
        // fingerprint of the derived stream, recorded in the report
        let mut probe = RngStream::for_trial(config.seed, trial);
        probe.next_u64()
    };
    let mut stream = RngStream::for_trial(config.seed, trial);
    let dim = config.dims[(trial as usize) % config.dims.len()];
    let combo = config.classes[(trial as usize) % config.classes.len()];

    let mut notes = Vec::new();
    let mut make = |class: OperatorClass, slot: &str, stream: &mut RngStream| {
        match generate(class, dim, stream) {
            Ok(m) => match classify(&m, 1e-10) {
                Ok(flags) if class_certified(class, &flags) => Some(m),
                Ok(flags) => {
                    notes.push(format!(
                        "trial {trial}: {slot} failed {class} certification ({flags}); trial aborted"
                    ));
                    None
                }
                Err(e) => {
                    notes.push(format!("trial {trial}: {slot} classify error: {e}"));
                    None
                }
            },
            Err(e) => {
                notes.push(format!("trial {trial}: {slot} generation error: {e}"));
                None
            }
        }
    };

    let a = make(combo.a, "A", &mut stream);
    let b = make(combo.b, "B", &mut stream);
    let x = make(combo.x, "X", &mut stream);
    let (a, b, x) = match (a, b, x) {
        (Some(a), Some(b), Some(x)) => (a, b, x),
        _ => {
            return TrialOutcome {
                rows: Vec::new(),
                notes,
            }
        }
    };

    let mut ops = Operands::with_a(a);
    ops.b = Some(b);
    ops.x = Some(x);
    ops.unit_x = Some(random_unit_vector(dim, &mut stream));
    ops.unit_y = Some(random_unit_vector(dim, &mut stream));
    ops.unit_e = Some(random_unit_vector(dim, &mut stream));
    let vec_scale = |stream: &mut RngStream| {
        Complex64::new(stream.next_gaussian(), stream.next_gaussian())
    };
    ops.vec_a = Some(random_unit_vector(dim, &mut stream).scale(vec_scale(&mut stream)));
    ops.vec_b = Some(random_unit_vector(dim, &mut stream).scale(vec_scale(&mut stream)));
    // nonnegative scalars spread over four decades
    ops.scalar_a = Some(stream.next_gaussian().abs() * 10f64.powf(stream.next_range(-2.0, 2.0)));
    ops.scalar_b = Some(stream.next_gaussian().abs() * 10f64.powf(stream.next_range(-2.0, 2.0)));

    let run = check_all(
        &ops,
        &config.param_grid,
        config.tol,
        config.checker_filter.as_deref(),
    );
    let rows = run
        .results
        .into_iter()
        .map(|result| ReportRow {
            trial,
            dim,
            class_a: combo.a.tag().to_string(),
            class_b: combo.b.tag().to_string(),
            class_x: combo.x.tag().to_string(),
            sub_seed,
            result,
        })
        .collect();
    notes.extend(run.skipped.into_iter().map(|s| format!("{s} (trial {trial})")));
    TrialOutcome { rows, notes }
}

fn resolve_threads(config: &FuzzConfig) -> usize {
    let requested = config
        .threads
        .or_else(|| {
            std::env::var("NUMRAD_THREADS")
                .ok()
                .and_then(|v| v.parse::<usize>().ok())
        })
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        });
    requested.max(1).min(config.trials as usize)
}

/// Run the sweep. Rows are ordered by (trial, registry order, grid order)
/// and are byte-identical across repeated runs with the same config.
pub fn run_sweep(config: &FuzzConfig) -> Result<FuzzReport> {
    config.validate()?;
    let trials = config.trials;
    let threads = resolve_threads(config);

    let mut slots: Vec<Option<TrialOutcome>> = (0..trials).map(|_| None).collect();
    if threads <= 1 {
        for t in 0..trials {
            slots[t as usize] = Some(run_trial(config, t));
        }
    } else {
        let next = AtomicU64::new(0);
        std::thread::scope(|scope| {
            let mut handles = Vec::with_capacity(threads);
            for _ in 0..threads {
                let next = &next;
                handles.push(scope.spawn(move || {
                    let mut local = Vec::new();
                    loop {
                        let t = next.fetch_add(1, Ordering::Relaxed);
                        if t >= trials {
                            break;
                        }
                        local.push((t, run_trial(config, t)));
                    }
                    local
                }));
            }
            for handle in handles {
                for (t, outcome) in handle.join().expect("sweep worker panicked") {
                    slots[t as usize] = Some(outcome);
                }
            }
        });
    }

    let mut rows = Vec::new();
    let mut notes = Vec::new();
    for outcome in slots.into_iter().flatten() {
        rows.extend(outcome.rows);
        notes.extend(outcome.notes);
    }
    let summary = FuzzReport::recompute_summary(&rows, &notes);
    Ok(FuzzReport {
        meta: ReportMeta {
            trials: config.trials,
            dims: config.dims.clone(),
            seed: config.seed,
            tol: config.tol,
            checker_filter: config.checker_filter.clone(),
        },
        rows,
        summary,
        notes,
    })
}
