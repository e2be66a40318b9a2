//! Checker parameters and operand bundles.

use serde::{Deserialize, Serialize};

use crate::linalg::{ComplexMatrix, Vector};

/// Parameters consumed by the checkers. A field is `None` when the checker
/// (or the particular link family) does not use it; reports emit missing
/// parameters as empty cells.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct CheckParams {
    /// Power exponent on the numerical radius, r ≥ 0.
    pub r: Option<f64>,
    /// Conjugate exponent, p > 1.
    pub p: Option<f64>,
    /// Conjugate exponent, q > 1 with 1/p + 1/q = 1.
    pub q: Option<f64>,
    /// Interpolation weight in [0, 1].
    pub alpha: Option<f64>,
    /// Function-pair exponent in [0, 1] (f = t^s, g = t^{1−s}).
    pub s: Option<f64>,
    /// Integer power for the power inequality, ≥ 1.
    pub n_power: Option<u32>,
}

impl CheckParams {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn with_r(r: f64) -> Self {
        Self {
            r: Some(r),
            ..Self::default()
        }
    }

    /// |1/p + 1/q − 1| ≤ 1e−12 whenever both are consumed.
    pub fn conjugate_residual(&self) -> Option<f64> {
        match (self.p, self.q) {
            (Some(p), Some(q)) => Some((1.0 / p + 1.0 / q - 1.0).abs()),
            _ => None,
        }
    }

    fn fmt_opt(v: Option<f64>) -> String {
        v.map(|x| format!("{x}")).unwrap_or_default()
    }

    /// Cells in CSV column order: r, p, q, alpha, s, n_power.
    pub fn csv_cells(&self) -> [String; 6] {
        [
            Self::fmt_opt(self.r),
            Self::fmt_opt(self.p),
            Self::fmt_opt(self.q),
            Self::fmt_opt(self.alpha),
            Self::fmt_opt(self.s),
            self.n_power.map(|n| n.to_string()).unwrap_or_default(),
        ]
    }

    /// Compact human-readable form for CLI lines and notes.
    pub fn label(&self) -> String {
        let mut parts = Vec::new();
        if let Some(r) = self.r {
            parts.push(format!("r={r}"));
        }
        if let Some(p) = self.p {
            parts.push(format!("p={p}"));
        }
        if let Some(q) = self.q {
            parts.push(format!("q={q}"));
        }
        if let Some(a) = self.alpha {
            parts.push(format!("alpha={a}"));
        }
        if let Some(s) = self.s {
            parts.push(format!("s={s}"));
        }
        if let Some(n) = self.n_power {
            parts.push(format!("n={n}"));
        }
        parts.join(",")
    }
}

/// Operand bundle for the checkers. Matrix entries use slots A, B, X;
/// vector-level checkers consume unit vectors x, y, e and general vectors
/// a, b; the scalar checker consumes the nonnegative pair (sa, sb).
#[derive(Debug, Clone, Default)]
pub struct Operands {
    pub a: Option<ComplexMatrix>,
    pub b: Option<ComplexMatrix>,
    pub x: Option<ComplexMatrix>,
    pub unit_x: Option<Vector>,
    pub unit_y: Option<Vector>,
    pub unit_e: Option<Vector>,
    pub vec_a: Option<Vector>,
    pub vec_b: Option<Vector>,
    pub scalar_a: Option<f64>,
    pub scalar_b: Option<f64>,
}

impl Operands {
    pub fn with_a(a: ComplexMatrix) -> Self {
        Self {
            a: Some(a),
            ..Self::default()
        }
    }

    /// Content digest across all present operands, order-stable.
    pub fn digest(&self) -> String {
        use crate::linalg::matrix::Fnv1a;
        let mut h = Fnv1a::new();
        for (label, m) in [(b'A', &self.a), (b'B', &self.b), (b'X', &self.x)] {
            if let Some(m) = m {
                h.write_bytes(&[label]);
                h.write_bytes(m.digest().as_bytes());
            }
        }
        for (label, v) in [
            (b'x', &self.unit_x),
            (b'y', &self.unit_y),
            (b'e', &self.unit_e),
            (b'a', &self.vec_a),
            (b'b', &self.vec_b),
        ] {
            if let Some(v) = v {
                h.write_bytes(&[label]);
                for z in v.entries() {
                    h.write_u64(z.re.to_bits());
                    h.write_u64(z.im.to_bits());
                }
            }
        }
        for (label, s) in [(b's', self.scalar_a), (b't', self.scalar_b)] {
            if let Some(s) = s {
                h.write_bytes(&[label]);
                h.write_u64(s.to_bits());
            }
        }
        format!("{:016x}", h.finish())
    }
}
