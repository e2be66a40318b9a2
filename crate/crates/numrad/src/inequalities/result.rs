//! One inequality evaluation.

use serde::{Deserialize, Serialize};

use crate::inequalities::params::CheckParams;

/// Outcome of one checker link: lhs ≤ rhs tested as slack ≥ −tolerance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub checker_id: String,
    /// Sub-result label for multi-link entries; empty for single-link ones.
    pub link: String,
    pub params: CheckParams,
    pub lhs: f64,
    pub rhs: f64,
    /// rhs − lhs; nonnegative slack means the inequality holds here.
    pub slack: f64,
    pub satisfied: bool,
    pub tolerance: f64,
    pub operand_digest: String,
    pub notes: String,
}

impl CheckResult {
    /// Assemble a result with the crate's tolerance convention:
    /// base relative tolerance plus any propagated solver error.
    pub fn build(
        checker_id: &str,
        link: &str,
        params: CheckParams,
        lhs: f64,
        rhs: f64,
        rel_tol: f64,
        extra_tol: f64,
        operand_digest: &str,
        notes: String,
    ) -> Self {
        let tolerance = rel_tol * lhs.abs().max(rhs.abs()).max(1.0) + extra_tol;
        let slack = rhs - lhs;
        Self {
            checker_id: checker_id.to_string(),
            link: link.to_string(),
            params,
            lhs,
            rhs,
            slack,
            satisfied: slack >= -tolerance,
            tolerance,
            operand_digest: operand_digest.to_string(),
            notes,
        }
    }

    /// `R05` or `R17[link]` for display.
    pub fn display_id(&self) -> String {
        if self.link.is_empty() {
            self.checker_id.clone()
        } else {
            format!("{}[{}]", self.checker_id, self.link)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn satisfied_respects_tolerance() {
        let ok = CheckResult::build("R00", "", CheckParams::none(), 1.0, 1.0 - 5e-9, 1e-8, 0.0, "d", String::new());
        assert!(ok.satisfied);
        let bad = CheckResult::build("R00", "", CheckParams::none(), 1.0, 0.5, 1e-8, 0.0, "d", String::new());
        assert!(!bad.satisfied);
        assert_eq!(bad.slack, -0.5);
    }

    #[test]
    fn extra_tolerance_absorbs_solver_error() {
        let r = CheckResult::build("R00", "", CheckParams::none(), 1.0, 1.0 - 2e-8, 1e-8, 1e-7, "d", String::new());
        assert!(r.satisfied);
    }
}
