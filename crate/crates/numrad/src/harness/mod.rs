//! Seeded random operator generation, registry sweeps, and report
//! serialization.

pub mod generate;
pub mod report;
pub mod rng;
pub mod sweep;

pub use generate::{class_certified, generate, OperatorClass};
pub use report::{read_report, write_report, ReportFormat};
pub use rng::RngStream;
pub use sweep::{
    default_class_combos, run_sweep, CheckerSummary, ClassCombo, FuzzConfig, FuzzReport, ReportRow,
};
