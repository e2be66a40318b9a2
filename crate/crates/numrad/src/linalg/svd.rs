//! Singular value decomposition and the operator norm.
//!
//! The SVD reuses the Hermitian Jacobi kernel: eigendecompose A*A for the
//! right factor and singular values, recover the left factor from A·V, and
//! complete null directions by Gram–Schmidt against the standard basis.
//! Accuracy for singular values near √ε·‖A‖ is limited by the squaring; the
//! crate's 1e-8 test tolerances account for that.

use num_complex::Complex64;

use crate::error::Result;
use crate::linalg::eig::{hermitian_eig, lambda_max_bracket, TridiagWorkspace};
use crate::linalg::matrix::ComplexMatrix;

/// Unitary factors and descending singular values with A = W Σ V*.
#[derive(Debug, Clone)]
pub struct SvdFactors {
    pub left: ComplexMatrix,
    pub singular_values: Vec<f64>,
    pub right: ComplexMatrix,
}

impl SvdFactors {
    /// W · diag(σ) · V*.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.singular_values.len();
        let mut scaled = self.left.clone();
        for j in 0..n {
            let s = self.singular_values[j];
            for i in 0..n {
                scaled.set(i, j, self.left.get(i, j) * s);
            }
        }
        scaled.matmul(&self.right.adjoint()).expect("same dim")
    }
}

/// Relative cutoff below which a singular direction counts as null.
pub(crate) const RANK_CUTOFF: f64 = 1e-12;

pub fn svd(a: &ComplexMatrix) -> Result<SvdFactors> {
    a.ensure_finite("svd input")?;
    let n = a.dim();
    let gram = a.adjoint().matmul(a)?;
    let spec = hermitian_eig(&gram)?;

    // A·V column norms give the singular values directly; this is noticeably
    // more accurate than sqrt of the Gram eigenvalues for small σ.
    let av = a.matmul(&spec.eigenvectors)?;
    let mut cols: Vec<(f64, usize)> = (0..n)
        .map(|j| {
            let s: f64 = (0..n).map(|i| av.get(i, j).norm_sqr()).sum::<f64>().sqrt();
            (s, j)
        })
        .collect();
    cols.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap().then(x.1.cmp(&y.1)));

    let sigma_max = cols[0].0;
    let cutoff = RANK_CUTOFF * sigma_max;

    let mut right = ComplexMatrix::zeros(n);
    let mut left = ComplexMatrix::zeros(n);
    let mut singular_values = Vec::with_capacity(n);
    let mut filled = vec![false; n];

    for (new_j, &(s, old_j)) in cols.iter().enumerate() {
        singular_values.push(s);
        for i in 0..n {
            right.set(i, new_j, spec.eigenvectors.get(i, old_j));
        }
        if s > cutoff && s > 0.0 {
            // u = A v / ‖A v‖, re-orthogonalized against earlier columns
            let mut u: Vec<Complex64> = (0..n).map(|i| av.get(i, old_j)).collect();
            for _ in 0..2 {
                for k in 0..new_j {
                    if !filled[k] {
                        continue;
                    }
                    let proj: Complex64 = (0..n)
                        .map(|i| left.get(i, k).conj() * u[i])
                        .sum();
                    for i in 0..n {
                        let sub = left.get(i, k) * proj;
                        u[i] -= sub;
                    }
                }
            }
            let norm: f64 = u.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm > 0.5 * s {
                for i in 0..n {
                    left.set(i, new_j, u[i] / norm);
                }
                filled[new_j] = true;
            }
        }
    }

    // complete remaining left columns from standard basis vectors
    for j in 0..n {
        if filled[j] {
            continue;
        }
        let mut best: Option<(f64, Vec<Complex64>)> = None;
        for k in 0..n {
            let mut cand = vec![Complex64::new(0.0, 0.0); n];
            cand[k] = Complex64::new(1.0, 0.0);
            for _ in 0..2 {
                for c in 0..n {
                    if c == j || !filled[c] {
                        continue;
                    }
                    let proj: Complex64 =
                        (0..n).map(|i| left.get(i, c).conj() * cand[i]).sum();
                    for i in 0..n {
                        let sub = left.get(i, c) * proj;
                        cand[i] -= sub;
                    }
                }
            }
            let norm: f64 = cand.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if best.as_ref().is_none_or(|(b, _)| norm > *b) {
                best = Some((norm, cand));
            }
        }
        let (norm, cand) = best.expect("candidate basis vector");
        for i in 0..n {
            left.set(i, j, cand[i] / norm);
        }
        filled[j] = true;
    }

    Ok(SvdFactors {
        left,
        singular_values,
        right,
    })
}

/// Largest singular value, computed as √λ_max(A*A) through the fast
/// tridiagonal path.
pub fn operator_norm(a: &ComplexMatrix) -> Result<f64> {
    a.ensure_finite("operator_norm input")?;
    let gram = a.adjoint().matmul(a)?;
    let mut ws = TridiagWorkspace::new();
    let (_, hi) = lambda_max_bracket(&gram.symmetrize(), &mut ws);
    Ok(hi.max(0.0).sqrt())
}

/// Smallest singular value, measured as the smallest column norm of A·V
/// (robust near zero, unlike √λ_min of the Gram matrix).
pub fn sigma_min(a: &ComplexMatrix) -> Result<f64> {
    a.ensure_finite("sigma_min input")?;
    let n = a.dim();
    let gram = a.adjoint().matmul(a)?;
    let spec = hermitian_eig(&gram)?;
    let av = a.matmul(&spec.eigenvectors)?;
    let mut min = f64::INFINITY;
    for j in 0..n {
        let s: f64 = (0..n).map(|i| av.get(i, j).norm_sqr()).sum::<f64>().sqrt();
        min = min.min(s);
    }
    Ok(min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::rng::RngStream;
    use crate::harness::{generate, OperatorClass};

    #[test]
    fn singular_values_of_fixed_cases() {
        let m = ComplexMatrix::from_real(2, &[0.0, 2.0, 0.0, 0.0]).unwrap();
        let f = svd(&m).unwrap();
        assert!((f.singular_values[0] - 2.0).abs() < 1e-12);
        assert!(f.singular_values[1].abs() < 1e-12);

        let f = svd(&ComplexMatrix::identity(3)).unwrap();
        for s in &f.singular_values {
            assert!((s - 1.0).abs() < 1e-12);
        }

        let m = ComplexMatrix::from_real(2, &[1.0, 0.0, 0.0, -3.0]).unwrap();
        let f = svd(&m).unwrap();
        assert!((f.singular_values[0] - 3.0).abs() < 1e-12);
        assert!((f.singular_values[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn operator_norm_fixed_cases() {
        let m = ComplexMatrix::from_real(2, &[1.0, 0.0, 0.0, -3.0]).unwrap();
        assert!((operator_norm(&m).unwrap() - 3.0).abs() < 1e-12);
        let m = ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!((operator_norm(&m).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(operator_norm(&ComplexMatrix::zeros(2)).unwrap(), 0.0);
    }

    #[test]
    fn reconstruction_and_unitarity_on_random_matrices() {
        let mut stream = RngStream::new(7);
        for trial in 0..120 {
            let n = 2 + trial % 10;
            let class = match trial % 4 {
                0 => OperatorClass::Ginibre,
                1 => OperatorClass::Nilpotent,
                2 => OperatorClass::RankDeficient,
                _ => OperatorClass::Normal,
            };
            let a = generate(class, n, &mut stream).unwrap();
            let f = svd(&a).unwrap();
            let tol = 1e-10 * a.scale_floor();
            assert!(
                f.reconstruct().sub(&a).unwrap().frobenius_norm() <= tol,
                "svd reconstruction failed (trial {trial})"
            );
            for side in [&f.left, &f.right] {
                let gram = side.adjoint().matmul(side).unwrap();
                let eye = ComplexMatrix::identity(n);
                assert!(gram.sub(&eye).unwrap().frobenius_norm() <= 1e-10 * (n as f64));
            }
            for w in f.singular_values.windows(2) {
                assert!(w[0] >= w[1]);
                assert!(w[1] >= 0.0);
            }
            // σ_max is the operator norm
            let nrm = operator_norm(&a).unwrap();
            assert!((f.singular_values[0] - nrm).abs() <= 1e-8 * a.scale_floor());
        }
    }

    #[test]
    fn norm_invariants() {
        // ‖A*‖ = ‖A‖ and ‖A‖² = ‖A*A‖
        let mut stream = RngStream::new(99);
        for trial in 0..100 {
            let n = 2 + trial % 8;
            let a = generate(OperatorClass::Ginibre, n, &mut stream).unwrap();
            let na = operator_norm(&a).unwrap();
            let nadj = operator_norm(&a.adjoint()).unwrap();
            assert!((na - nadj).abs() <= 1e-10 * na.max(1.0));
            let gram_norm = operator_norm(&a.adjoint().matmul(&a).unwrap()).unwrap();
            assert!((na * na - gram_norm).abs() <= 1e-8 * gram_norm.max(1.0));
        }
    }

    #[test]
    fn sigma_min_detects_singularity() {
        let jordan = ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(sigma_min(&jordan).unwrap() < 1e-12);
        assert!((sigma_min(&ComplexMatrix::identity(3)).unwrap() - 1.0).abs() < 1e-10);
    }
}
