//! Dense complex matrices and vectors, the universal operands of the crate.
//!
//! Matrices are square, row-major and validated to contain only finite
//! entries. The inner product is linear in the first argument:
//! `⟨x, y⟩ = Σ xᵢ · conj(yᵢ)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense n×n complex matrix with finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>, // row-major, length n*n
}

impl ComplexMatrix {
    /// Build from row-major entries; fails on ragged, non-square or
    /// non-finite input.
    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotSquare { rows: 0, cols: 0 });
        }
        let mut data = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        let m = Self { n, data };
        m.ensure_finite("matrix entries")?;
        Ok(m)
    }

    /// Build from a flat row-major slice of length n².
    pub fn from_flat(n: usize, data: Vec<Complex64>) -> Result<Self> {
        if n == 0 || data.len() != n * n {
            return Err(Error::NotSquare {
                rows: n,
                cols: data.len().checked_div(n).unwrap_or(0),
            });
        }
        let m = Self { n, data };
        m.ensure_finite("matrix entries")?;
        Ok(m)
    }

    /// Build from real row-major entries.
    pub fn from_real(n: usize, entries: &[f64]) -> Result<Self> {
        let data = entries.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::from_flat(n, data)
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn diagonal(entries: &[Complex64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n);
        for (i, &d) in entries.iter().enumerate() {
            m.data[i * n + i] = d;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub(crate) fn ensure_finite(&self, context: &'static str) -> Result<()> {
        if self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            Ok(())
        } else {
            Err(Error::NonFinite { context })
        }
    }

    /// Conjugate transpose A*.
    pub fn adjoint(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].conj();
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { n: self.n, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self { n: self.n, data })
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|z| z * c).collect(),
        }
    }

    pub fn scale_re(&self, c: f64) -> Self {
        self.scale(Complex64::new(c, 0.0))
    }

    /// Matrix product A·B.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.data[i * n + k];
                if aik.re == 0.0 && aik.im == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += aik * other.data[k * n + j];
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product A·x.
    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        if x.dim() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: x.dim(),
            });
        }
        let n = self.n;
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for i in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..n {
                acc += self.data[i * n + j] * x.entries()[j];
            }
            out[i] = acc;
        }
        Ok(Vector::new(out))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// max(1, ‖A‖_F): the relative-tolerance scale used throughout.
    pub fn scale_floor(&self) -> f64 {
        self.frobenius_norm().max(1.0)
    }

    /// Hermitian symmetrization (A + A*)/2, with the mirror enforced exactly.
    pub fn symmetrize(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            let d = self.data[i * n + i];
            out.data[i * n + i] = Complex64::new(d.re, 0.0);
            for j in (i + 1)..n {
                let v = (self.data[i * n + j] + self.data[j * n + i].conj()) * 0.5;
                out.data[i * n + j] = v;
                out.data[j * n + i] = v.conj();
            }
        }
        out
    }

    /// Hermitian part (A + A*)/2 rotated by a phase: Re(e^{iθ}A).
    pub fn rotated_hermitian_part(&self, theta: f64) -> Self {
        let mut out = Self::zeros(self.n);
        self.rotated_hermitian_part_into(theta, &mut out);
        out
    }

    /// Allocation-free variant for sweep hot loops; `out` must match in
    /// dimension.
    pub fn rotated_hermitian_part_into(&self, theta: f64, out: &mut Self) {
        assert_eq!(self.n, out.n, "buffer dimension mismatch");
        let phase = Complex64::from_polar(1.0, theta);
        let n = self.n;
        for i in 0..n {
            let d = phase * self.data[i * n + i];
            out.data[i * n + i] = Complex64::new(d.re, 0.0);
            for j in (i + 1)..n {
                let v = (phase * self.data[i * n + j]
                    + (phase * self.data[j * n + i]).conj())
                    * 0.5;
                out.data[i * n + j] = v;
                out.data[j * n + i] = v.conj();
            }
        }
    }

    /// Off-diagonal block dilation [[0, X], [X*, 0]] of size 2n.
    pub fn block_off_diagonal(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(2 * n);
        for i in 0..n {
            for j in 0..n {
                out.data[i * 2 * n + (n + j)] = self.data[i * n + j];
                out.data[(n + i) * 2 * n + j] = self.data[j * n + i].conj();
            }
        }
        out
    }

    /// Block diagonal [[A, 0], [0, B]].
    pub fn block_diagonal(a: &Self, b: &Self) -> Result<Self> {
        a.check_dim(b)?;
        let n = a.n;
        let mut out = Self::zeros(2 * n);
        for i in 0..n {
            for j in 0..n {
                out.data[i * 2 * n + j] = a.data[i * n + j];
                out.data[(n + i) * 2 * n + (n + j)] = b.data[i * n + j];
            }
        }
        Ok(out)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    /// Content hash of the entries, stable across runs: FNV-1a over the
    /// dimension and the IEEE-754 bit patterns.
    pub fn digest(&self) -> String {
        let mut h = Fnv1a::new();
        h.write_u64(self.n as u64);
        for z in &self.data {
            h.write_u64(z.re.to_bits());
            h.write_u64(z.im.to_bits());
        }
        format!("{:016x}", h.finish())
    }

    /// Parse the matrix JSON schema
    /// `{"n": <int>, "entries": [[[re,im], ...], ...]}` (row-major).
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: MatrixJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if raw.n == 0 {
            return Err(Error::Parse("dimension n must be positive".into()));
        }
        if raw.entries.len() != raw.n {
            return Err(Error::Parse(format!(
                "expected {} rows, found {}",
                raw.n,
                raw.entries.len()
            )));
        }
        let mut data = Vec::with_capacity(raw.n * raw.n);
        for (i, row) in raw.entries.iter().enumerate() {
            if row.len() != raw.n {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected {}",
                    i,
                    row.len(),
                    raw.n
                )));
            }
            for &[re, im] in row {
                if !re.is_finite() || !im.is_finite() {
                    return Err(Error::Parse(format!("non-finite entry in row {}", i)));
                }
                data.push(Complex64::new(re, im));
            }
        }
        Ok(Self { n: raw.n, data })
    }

    /// Serialize to the matrix JSON schema.
    pub fn to_json(&self) -> String {
        let entries: Vec<Vec<[f64; 2]>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| [self.get(i, j).re, self.get(i, j).im]).collect())
            .collect();
        serde_json::to_string(&MatrixJson { n: self.n, entries }).expect("matrix json")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixJson {
    n: usize,
    entries: Vec<Vec<[f64; 2]>>,
}

/// Complex column vector with finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    data: Vec<Complex64>,
}

impl Vector {
    pub fn new(data: Vec<Complex64>) -> Self {
        Self { data }
    }

    pub fn from_real(entries: &[f64]) -> Self {
        Self::new(entries.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn basis(n: usize, k: usize) -> Self {
        let mut data = vec![Complex64::new(0.0, 0.0); n];
        data[k] = Complex64::new(1.0, 0.0);
        Self { data }
    }

    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// ⟨x, y⟩ = Σ xᵢ conj(yᵢ), linear in the first argument.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a * b.conj())
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalized(&self) -> Option<Self> {
        let nrm = self.norm();
        if nrm == 0.0 {
            return None;
        }
        Some(Self {
            data: self.data.iter().map(|z| z / nrm).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            data: self.data.iter().map(|z| z * c).collect(),
        }
    }
}

/// 64-bit FNV-1a, used for operand digests.
pub(crate) struct Fnv1a(u64);

impl Fnv1a {
    pub fn new() -> Self {
        Fnv1a(0xcbf29ce484222325)
    }

    pub fn write_u64(&mut self, v: u64) {
        for byte in v.to_le_bytes() {
            self.0 ^= byte as u64;
            self.0 = self.0.wrapping_mul(0x100000001b3);
        }
    }

    pub fn write_bytes(&mut self, bytes: &[u8]) {
        for &byte in bytes {
            self.0 ^= byte as u64;
            self.0 = self.0.wrapping_mul(0x100000001b3);
        }
    }

    pub fn finish(&self) -> u64 {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jordan2() -> ComplexMatrix {
        ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]).unwrap()
    }

    #[test]
    fn rejects_ragged_rows() {
        let rows = vec![
            vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
            vec![Complex64::new(0.0, 0.0)],
        ];
        assert!(matches!(
            ComplexMatrix::from_rows(rows),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn rejects_non_finite() {
        let rows = vec![vec![Complex64::new(f64::NAN, 0.0)]];
        assert!(matches!(
            ComplexMatrix::from_rows(rows),
            Err(Error::NonFinite { .. })
        ));
    }

    #[test]
    fn adjoint_conjugates_and_transposes() {
        let m = ComplexMatrix::from_rows(vec![
            vec![Complex64::new(1.0, 2.0), Complex64::new(3.0, -1.0)],
            vec![Complex64::new(0.0, 0.5), Complex64::new(-2.0, 0.0)],
        ])
        .unwrap();
        let a = m.adjoint();
        assert_eq!(a.get(0, 1), Complex64::new(0.0, -0.5));
        assert_eq!(a.get(1, 0), Complex64::new(3.0, 1.0));
    }

    #[test]
    fn rotated_hermitian_part_matches_definition() {
        let m = jordan2();
        let theta = 0.7;
        let h = m.rotated_hermitian_part(theta);
        let phase = Complex64::from_polar(1.0, theta);
        let direct = m.scale(phase).add(&m.adjoint().scale(phase.conj())).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let want = direct.get(i, j) * 0.5;
                assert!((h.get(i, j) - want).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn json_schema_round_trip() {
        let m = ComplexMatrix::from_rows(vec![
            vec![Complex64::new(0.25, -1.5), Complex64::new(0.0, 3.0)],
            vec![Complex64::new(1e-7, 0.0), Complex64::new(-0.125, 2.0)],
        ])
        .unwrap();
        let back = ComplexMatrix::from_json(&m.to_json()).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn json_rejects_ragged_and_non_finite() {
        assert!(ComplexMatrix::from_json(r#"{"n":2,"entries":[[[1,0],[0,0]],[[0,0]]]}"#).is_err());
        assert!(ComplexMatrix::from_json(r#"{"n":1,"entries":[[[1e999,0]]]}"#).is_err());
        assert!(ComplexMatrix::from_json(r#"{"n":1,"entries":[[[1,0]]],"extra":1}"#).is_err());
    }

    #[test]
    fn block_off_diagonal_is_self_adjoint() {
        let x = ComplexMatrix::from_rows(vec![
            vec![Complex64::new(1.0, 1.0), Complex64::new(2.0, -0.5)],
            vec![Complex64::new(0.0, 3.0), Complex64::new(-1.0, 0.0)],
        ])
        .unwrap();
        let hat = x.block_off_diagonal();
        let diff = hat.sub(&hat.adjoint()).unwrap();
        assert_eq!(diff.frobenius_norm(), 0.0);
        assert_eq!(hat.get(0, 2), x.get(0, 0));
        assert_eq!(hat.get(2, 0), x.get(0, 0).conj());
    }

    #[test]
    fn digest_distinguishes_matrices() {
        let a = jordan2();
        let mut b = jordan2();
        b.set(0, 1, Complex64::new(1.0 + 1e-16, 0.0));
        assert_eq!(a.digest(), jordan2().digest());
        // 1.0 + 1e-16 rounds to 1.0 in f64, so digests agree there too
        assert_eq!(a.digest(), b.digest());
        b.set(0, 1, Complex64::new(2.0, 0.0));
        assert_ne!(a.digest(), b.digest());
    }

    #[test]
    fn inner_product_linear_in_first_argument() {
        let x = Vector::new(vec![Complex64::new(1.0, 2.0), Complex64::new(0.0, -1.0)]);
        let y = Vector::new(vec![Complex64::new(0.5, 0.0), Complex64::new(1.0, 1.0)]);
        let c = Complex64::new(0.0, 2.0);
        let lhs = x.scale(c).inner(&y);
        let rhs = x.inner(&y) * c;
        assert!((lhs - rhs).norm() < 1e-15);
    }
}
