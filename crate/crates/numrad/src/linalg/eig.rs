//! Hermitian eigendecomposition.
//!
//! Two kernels live here:
//!
//! * [`hermitian_eig`] — cyclic complex Jacobi with accumulated eigenvectors,
//!   unconditionally stable at the dimensions this crate targets (n ≤ 256).
//!   The input is symmetrized first, so callers may pass anything that is
//!   Hermitian up to roundoff.
//! * [`lambda_max_bracket`] / [`lambda_min_bracket`] — fast extreme-eigenvalue
//!   brackets via Householder tridiagonalization and Sturm-count bisection,
//!   returning a rigorous `[lo, hi]` enclosure. No eigenvectors, no
//!   allocations beyond a reusable workspace; this is the inner loop of the
//!   numerical-radius sweep.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::matrix::ComplexMatrix;

/// Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianSpectrum {
    pub eigenvalues: Vec<f64>,
    /// Columns are eigenvectors; column j pairs with `eigenvalues[j]`.
    pub eigenvectors: ComplexMatrix,
}

impl HermitianSpectrum {
    /// V · diag(f(λ)) · V*.
    pub fn recompose_with(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.eigenvalues.len();
        let v = &self.eigenvectors;
        let mut out = ComplexMatrix::zeros(n);
        for k in 0..n {
            let fv = f(self.eigenvalues[k]);
            if fv == 0.0 {
                continue;
            }
            for i in 0..n {
                let vik = v.get(i, k) * fv;
                for j in 0..n {
                    let add = vik * v.get(j, k).conj();
                    out.set(i, j, out.get(i, j) + add);
                }
            }
        }
        // exact Hermitian mirror, so downstream symmetrize() is a no-op
        out.symmetrize()
    }

    /// Eigenvector for the largest eigenvalue.
    pub fn top_eigenvector(&self) -> crate::linalg::matrix::Vector {
        let n = self.eigenvalues.len();
        let col = n - 1;
        let data = (0..n).map(|i| self.eigenvectors.get(i, col)).collect();
        crate::linalg::matrix::Vector::new(data)
    }
}

/// Cyclic complex Jacobi eigendecomposition of (H + H*)/2.
///
/// Rotation budget is 100·n² per the crate-wide convergence contract;
/// exceeding it reports `ConvergenceFailure`.
pub fn hermitian_eig(h: &ComplexMatrix) -> Result<HermitianSpectrum> {
    h.ensure_finite("hermitian_eig input")?;
    let n = h.dim();
    let mut a = h.symmetrize();
    let mut v = ComplexMatrix::identity(n);

    if n == 1 {
        return Ok(HermitianSpectrum {
            eigenvalues: vec![a.get(0, 0).re],
            eigenvectors: v,
        });
    }

    let scale = a.frobenius_norm().max(1.0);
    let stop = 1e-15 * scale;
    let budget = 100 * n * n;
    let mut rotations = 0usize;

    loop {
        let mut rotated_this_sweep = false;
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                let mag = apq.norm();
                if mag <= stop {
                    continue;
                }
                rotations += 1;
                if rotations > budget {
                    return Err(Error::ConvergenceFailure {
                        algorithm: "cyclic complex Jacobi",
                        budget,
                    });
                }
                rotated_this_sweep = true;

                // Phase that makes the pivot real, then a real Givens angle.
                let phase = apq / mag; // e^{iβ}
                let app = a.get(p, p).re;
                let aqq = a.get(q, q).re;
                let tau = (aqq - app) / (2.0 * mag);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // Unitary U: column p <- c·p + s̄·... acting as A <- U* A U with
                //   U[p,p] = c, U[p,q] = s, U[q,p] = -s·conj(phase), U[q,q] = c·conj(phase)
                let upp = Complex64::new(c, 0.0);
                let upq = Complex64::new(s, 0.0);
                let uqp = -phase.conj() * s;
                let uqq = phase.conj() * c;

                // rows p and q of U*A
                for j in 0..n {
                    let apj = a.get(p, j);
                    let aqj = a.get(q, j);
                    a.set(p, j, upp.conj() * apj + uqp.conj() * aqj);
                    a.set(q, j, upq.conj() * apj + uqq.conj() * aqj);
                }
                // columns p and q of (U*A)U
                for i in 0..n {
                    let aip = a.get(i, p);
                    let aiq = a.get(i, q);
                    a.set(i, p, aip * upp + aiq * uqp);
                    a.set(i, q, aip * upq + aiq * uqq);
                }
                // accumulate V <- V·U
                for i in 0..n {
                    let vip = v.get(i, p);
                    let viq = v.get(i, q);
                    v.set(i, p, vip * upp + viq * uqp);
                    v.set(i, q, vip * upq + viq * uqq);
                }
                // pin the pivot and keep the matrix exactly Hermitian
                a.set(p, q, Complex64::new(0.0, 0.0));
                a.set(q, p, Complex64::new(0.0, 0.0));
                let dp = a.get(p, p).re;
                let dq = a.get(q, q).re;
                a.set(p, p, Complex64::new(dp, 0.0));
                a.set(q, q, Complex64::new(dq, 0.0));
            }
        }
        if !rotated_this_sweep {
            break;
        }
    }

    // sort ascending, permuting eigenvector columns alongside
    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).unwrap());

    let eigenvalues: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let mut vectors = ComplexMatrix::zeros(n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for i in 0..n {
            vectors.set(i, new_col, v.get(i, old_col));
        }
    }

    Ok(HermitianSpectrum {
        eigenvalues,
        eigenvectors: vectors,
    })
}

/// Reusable buffers for the tridiagonal extreme-eigenvalue path.
#[derive(Debug, Default)]
pub struct TridiagWorkspace {
    a: Vec<Complex64>, // working copy, row-major
    d: Vec<f64>,       // diagonal of the tridiagonal form
    e2: Vec<f64>,      // squared moduli of the off-diagonal
    hv: Vec<Complex64>,
    w: Vec<Complex64>,
}

impl TridiagWorkspace {
    pub fn new() -> Self {
        Self::default()
    }

    // Resize without zero-filling: tridiagonalize overwrites every slot it
    // reads (the matrix copy covers `a`; d and e2 are written in order; hv
    // and w are written before use within each step).
    fn reset(&mut self, n: usize) {
        if self.a.len() != n * n {
            self.a.resize(n * n, Complex64::new(0.0, 0.0));
            self.d.resize(n, 0.0);
            self.e2.resize(n.saturating_sub(1), 0.0);
            self.hv.resize(n, Complex64::new(0.0, 0.0));
            self.w.resize(n, Complex64::new(0.0, 0.0));
        }
    }

    /// Householder reduction of the Hermitian matrix to real symmetric
    /// tridiagonal form. Only d and |e|² are kept; Sturm counts depend on
    /// nothing else.
    fn tridiagonalize(&mut self, h: &ComplexMatrix) {
        let n = h.dim();
        self.reset(n);
        for i in 0..n {
            for j in 0..n {
                self.a[i * n + j] = h.get(i, j);
            }
        }
        for k in 0..n.saturating_sub(2) {
            self.d[k] = self.a[k * n + k].re;
            // column below the diagonal
            let mut norm_sq = 0.0;
            for i in (k + 1)..n {
                norm_sq += self.a[i * n + k].norm_sqr();
            }
            if norm_sq == 0.0 {
                self.e2[k] = 0.0;
                continue;
            }
            let norm = norm_sq.sqrt();
            let x0 = self.a[(k + 1) * n + k];
            let alpha = if x0.norm() == 0.0 {
                Complex64::new(-norm, 0.0)
            } else {
                -(x0 / x0.norm()) * norm
            };
            self.e2[k] = norm_sq; // |alpha|² = norm²

            // v = x - alpha e1 over the trailing index range (k+1..n)
            let mut vnorm_sq = 0.0;
            for i in (k + 1)..n {
                let vi = if i == k + 1 {
                    self.a[i * n + k] - alpha
                } else {
                    self.a[i * n + k]
                };
                self.hv[i] = vi;
                vnorm_sq += vi.norm_sqr();
            }
            if vnorm_sq == 0.0 {
                continue;
            }
            let beta = 2.0 / vnorm_sq;

            // w = beta · B v on the trailing block B = a[k+1.., k+1..]
            for i in (k + 1)..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for j in (k + 1)..n {
                    acc += self.a[i * n + j] * self.hv[j];
                }
                self.w[i] = acc * beta;
            }
            // K = (beta/2) · v*w  (real by Hermiticity)
            let mut kappa = Complex64::new(0.0, 0.0);
            for i in (k + 1)..n {
                kappa += self.hv[i].conj() * self.w[i];
            }
            let kappa = kappa * (beta * 0.5);
            // w <- w - K v
            for i in (k + 1)..n {
                self.w[i] -= kappa * self.hv[i];
            }
            // B <- B - v w* - w v*
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let upd = self.hv[i] * self.w[j].conj() + self.w[i] * self.hv[j].conj();
                    self.a[i * n + j] -= upd;
                }
            }
        }
        if n >= 2 {
            self.d[n - 2] = self.a[(n - 2) * n + (n - 2)].re;
            self.e2[n - 2] = self.a[(n - 1) * n + (n - 2)].norm_sqr();
        }
        self.d[n - 1] = self.a[(n - 1) * n + (n - 1)].re;
    }

    /// Number of eigenvalues strictly below x (Sturm count on the
    /// tridiagonal form).
    fn count_below(&self, n: usize, x: f64) -> usize {
        let mut count = 0usize;
        let mut q = self.d[0] - x;
        if q < 0.0 {
            count += 1;
        }
        for i in 1..n {
            let denom = if q.abs() < 1e-300 {
                if q >= 0.0 {
                    1e-300
                } else {
                    -1e-300
                }
            } else {
                q
            };
            q = self.d[i] - x - self.e2[i - 1] / denom;
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn gershgorin(&self, n: usize) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let e_left = if i > 0 { self.e2[i - 1].sqrt() } else { 0.0 };
            let e_right = if i + 1 < n { self.e2[i].sqrt() } else { 0.0 };
            let r = e_left + e_right;
            lo = lo.min(self.d[i] - r);
            hi = hi.max(self.d[i] + r);
        }
        (lo, hi)
    }
}

/// Rigorous bracket `[lo, hi]` for the largest eigenvalue of a Hermitian
/// matrix. The caller guarantees Hermitian input (use
/// `rotated_hermitian_part` / `symmetrize`).
pub fn lambda_max_bracket(h: &ComplexMatrix, ws: &mut TridiagWorkspace) -> (f64, f64) {
    let n = h.dim();
    if n == 1 {
        let v = h.get(0, 0).re;
        return (v, v);
    }
    if n == 2 {
        // closed form
        let a = h.get(0, 0).re;
        let d = h.get(1, 1).re;
        let b = h.get(0, 1).norm();
        let mid = 0.5 * (a + d);
        let rad = (0.25 * (a - d) * (a - d) + b * b).sqrt();
        let v = mid + rad;
        return (v, v);
    }
    ws.tridiagonalize(h);
    let (gl, gu) = ws.gershgorin(n);
    // λ_max ≥ max_i d_i (Rayleigh quotient at a basis vector)
    let mut lo = ws.d.iter().take(n).cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut hi = gu.max(lo);
    let scale = gl.abs().max(gu.abs()).max(1.0);
    let tol = 1e-14 * scale;
    let mut iter = 0;
    while hi - lo > tol && iter < 120 {
        let mid = 0.5 * (lo + hi);
        if ws.count_below(n, mid) >= n {
            hi = mid;
        } else {
            lo = mid;
        }
        iter += 1;
    }
    (lo, hi)
}

/// Rigorous bracket for the smallest eigenvalue; same contract as
/// [`lambda_max_bracket`].
pub fn lambda_min_bracket(h: &ComplexMatrix, ws: &mut TridiagWorkspace) -> (f64, f64) {
    let n = h.dim();
    if n == 1 {
        let v = h.get(0, 0).re;
        return (v, v);
    }
    if n == 2 {
        let a = h.get(0, 0).re;
        let d = h.get(1, 1).re;
        let b = h.get(0, 1).norm();
        let mid = 0.5 * (a + d);
        let rad = (0.25 * (a - d) * (a - d) + b * b).sqrt();
        let v = mid - rad;
        return (v, v);
    }
    ws.tridiagonalize(h);
    let (gl, gu) = ws.gershgorin(n);
    let mut hi = ws.d.iter().take(n).cloned().fold(f64::INFINITY, f64::min);
    let mut lo = gl.min(hi);
    let scale = gl.abs().max(gu.abs()).max(1.0);
    let tol = 1e-14 * scale;
    let mut iter = 0;
    while hi - lo > tol && iter < 120 {
        let mid = 0.5 * (lo + hi);
        if ws.count_below(n, mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
        iter += 1;
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::rng::RngStream;

    fn reconstruct(spec: &HermitianSpectrum) -> ComplexMatrix {
        spec.recompose_with(|l| l)
    }

    fn random_hermitian(n: usize, stream: &mut RngStream) -> ComplexMatrix {
        crate::harness::generate(crate::harness::OperatorClass::Hermitian, n, stream).unwrap()
    }

    #[test]
    fn diagonal_input_sorted() {
        let m = ComplexMatrix::from_real(2, &[3.0, 0.0, 0.0, 1.0]).unwrap();
        let spec = hermitian_eig(&m).unwrap();
        assert_eq!(spec.eigenvalues, vec![1.0, 3.0]);
        // permutation of identity: each column is a basis vector
        for col in 0..2 {
            let mut hits = 0;
            for row in 0..2 {
                if spec.eigenvectors.get(row, col).norm() > 0.9 {
                    hits += 1;
                }
            }
            assert_eq!(hits, 1);
        }
    }

    #[test]
    fn identity_four() {
        let spec = hermitian_eig(&ComplexMatrix::identity(4)).unwrap();
        assert_eq!(spec.eigenvalues, vec![1.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn symmetric_off_diagonal() {
        let m = ComplexMatrix::from_real(2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let spec = hermitian_eig(&m).unwrap();
        assert!((spec.eigenvalues[0] + 1.0).abs() < 1e-14);
        assert!((spec.eigenvalues[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn reconstruction_and_orthonormality_on_seeded_matrices() {
        // 1000 seeded random Hermitian matrices, n ≤ 32
        let mut stream = RngStream::new(0x5eed);
        let dims = [2usize, 3, 4, 5, 6, 8, 12, 16, 24, 32];
        for trial in 0..1000 {
            let n = dims[trial % dims.len()];
            let h = random_hermitian(n, &mut stream);
            let spec = hermitian_eig(&h).unwrap();
            let tol = 1e-10 * h.scale_floor();

            let recon = reconstruct(&spec);
            assert!(
                recon.sub(&h).unwrap().frobenius_norm() <= tol,
                "reconstruction failed at trial {trial} (n = {n})"
            );

            let v = &spec.eigenvectors;
            let gram = v.adjoint().matmul(v).unwrap();
            let eye = ComplexMatrix::identity(n);
            for i in 0..n {
                for j in 0..n {
                    assert!(
                        (gram.get(i, j) - eye.get(i, j)).norm() <= 1e-10,
                        "orthonormality failed at trial {trial} ({i},{j})"
                    );
                }
            }

            for w in spec.eigenvalues.windows(2) {
                assert!(w[0] <= w[1]);
            }
        }
    }

    #[test]
    fn bracket_agrees_with_jacobi() {
        let mut stream = RngStream::new(42);
        let mut ws = TridiagWorkspace::new();
        for trial in 0..200 {
            let n = 2 + trial % 15;
            let h = random_hermitian(n, &mut stream);
            let spec = hermitian_eig(&h).unwrap();
            let lmax = *spec.eigenvalues.last().unwrap();
            let lmin = spec.eigenvalues[0];
            let scale = h.scale_floor();

            let (lo, hi) = lambda_max_bracket(&h, &mut ws);
            assert!(hi - lo <= 1e-12 * scale);
            assert!(lmax >= lo - 1e-11 * scale && lmax <= hi + 1e-11 * scale);

            let (lo, hi) = lambda_min_bracket(&h, &mut ws);
            assert!(lmin >= lo - 1e-11 * scale && lmin <= hi + 1e-11 * scale);
        }
    }

    #[test]
    fn bracket_on_degenerate_spectrum() {
        let mut ws = TridiagWorkspace::new();
        let (lo, hi) = lambda_max_bracket(&ComplexMatrix::identity(5), &mut ws);
        assert!(lo <= 1.0 && 1.0 <= hi && hi - lo < 1e-12);
        let z = ComplexMatrix::zeros(4);
        let (lo, hi) = lambda_max_bracket(&z, &mut ws);
        assert!(lo <= 0.0 && 0.0 <= hi && hi - lo < 1e-13);
    }
}
