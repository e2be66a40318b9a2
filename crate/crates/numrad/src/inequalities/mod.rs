//! The inequality registry: every statement the crate verifies, evaluated as
//! lhs/rhs with slack and verdict.

pub mod context;
pub mod eval;
pub mod params;
pub mod registry;
pub mod result;

pub use context::CheckContext;
pub use eval::{check, check_all, check_with, CheckRun, DEFAULT_TOL};
pub use params::{CheckParams, Operands};
pub use registry::{applicable, grid_for, is_gating, lookup, registry, CheckerDef, ParamGrid};
pub use result::CheckResult;
