//! Operator transforms: polar decomposition, Aluthge transforms, Heinz
//! means, multiplicative function pairs, and paranormality evidence.

use crate::error::{Error, Result};
use crate::linalg::eig::HermitianSpectrum;
use crate::linalg::matrix::{ComplexMatrix, Vector};
use crate::linalg::spectral::{pow_conv, psd_spectrum};
use crate::linalg::svd::{svd, RANK_CUTOFF};

/// Polar factors T = U·|T| with U a partial isometry vanishing on ker|T|.
#[derive(Debug, Clone)]
pub struct PolarFactors {
    pub isometry: ComplexMatrix,
    pub modulus: ComplexMatrix,
}

/// Canonical polar decomposition U = W·Π·V* from the SVD T = WΣV*, where Π
/// keeps the singular directions with σ above the rank cutoff.
pub fn polar_decompose(t: &ComplexMatrix) -> Result<PolarFactors> {
    let f = svd(t)?;
    let n = t.dim();
    let sigma_max = f.singular_values.first().copied().unwrap_or(0.0);
    let cutoff = 1e-10 * sigma_max;

    // W·Π applied column-wise, then times V*
    let mut wpi = ComplexMatrix::zeros(n);
    for j in 0..n {
        if f.singular_values[j] > cutoff && f.singular_values[j] > 0.0 {
            for i in 0..n {
                wpi.set(i, j, f.left.get(i, j));
            }
        }
    }
    let isometry = wpi.matmul(&f.right.adjoint())?;

    // |T| = V Σ V*
    let mut vs = f.right.clone();
    for j in 0..n {
        let s = f.singular_values[j];
        for i in 0..n {
            vs.set(i, j, f.right.get(i, j) * s);
        }
    }
    let modulus = vs.matmul(&f.right.adjoint())?.symmetrize();

    Ok(PolarFactors { isometry, modulus })
}

/// Spectrum of |T| together with the polar isometry, for callers that need
/// several powers of the modulus.
fn polar_with_spectrum(t: &ComplexMatrix) -> Result<(ComplexMatrix, HermitianSpectrum)> {
    let factors = polar_decompose(t)?;
    let spec = psd_spectrum(&factors.modulus)?;
    Ok((factors.isometry, spec))
}

/// Aluthge transform |T|^{1/2} U |T|^{1/2}.
pub fn aluthge(t: &ComplexMatrix) -> Result<ComplexMatrix> {
    aluthge_general(t, 0.5)
}

/// Generalized Aluthge transform |T|^α U |T|^{1−α} for α ∈ [0, 1].
pub fn aluthge_general(t: &ComplexMatrix, alpha: f64) -> Result<ComplexMatrix> {
    if !(0.0..=1.0).contains(&alpha) || !alpha.is_finite() {
        return Err(Error::AlphaOutOfRange { alpha });
    }
    let (u, spec) = polar_with_spectrum(t)?;
    let sigma_max = spec.eigenvalues.iter().cloned().fold(0.0f64, f64::max);
    let cutoff = 1e-10 * sigma_max;
    // zero tiny spectrum so the 0-power convention matches the isometry's kernel
    let left = spec.recompose_with(|l| if l > cutoff { pow_conv(l, alpha) } else { 0.0 });
    let right = spec.recompose_with(|l| if l > cutoff { pow_conv(l, 1.0 - alpha) } else { 0.0 });
    left.matmul(&u)?.matmul(&right)
}

/// Pair of scalar maps with f(t)·g(t) = t on [0, ∞).
pub struct FunctionPair {
    pub f: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub g: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub description: String,
}

impl std::fmt::Debug for FunctionPair {
    fn fmt(&self, fmt: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(fmt, "FunctionPair({})", self.description)
    }
}

/// The power pair f(t) = t^s, g(t) = t^{1−s}, with 0⁰ := 0 so that
/// f(t)·g(t) = t holds down to t = 0 even at the boundary exponents.
pub fn power_pair(s: f64) -> Result<FunctionPair> {
    if !(0.0..=1.0).contains(&s) || !s.is_finite() {
        return Err(Error::OutOfRange {
            value: s,
            lo: 0.0,
            hi: 1.0,
        });
    }
    let pair = FunctionPair {
        f: Box::new(move |t| pow_conv(t, s)),
        g: Box::new(move |t| pow_conv(t, 1.0 - s)),
        description: format!("t^{s} / t^{}", 1.0 - s),
    };
    // product identity on a 64-point sample of [0, 1e3]
    for k in 0..64 {
        let t = 1000.0 * (k as f64) / 63.0;
        let fv = (pair.f)(t);
        let gv = (pair.g)(t);
        debug_assert!(fv >= 0.0 && gv >= 0.0);
        debug_assert!(
            (fv * gv - t).abs() <= 1e-10 * t.max(1.0),
            "product identity failed at t = {t}"
        );
    }
    Ok(pair)
}

/// Heinz mean H_α = (A^α X B^{1−α} + A^{1−α} X B^α)/2 for PSD A, B.
pub fn heinz_mean(
    a: &ComplexMatrix,
    x: &ComplexMatrix,
    b: &ComplexMatrix,
    alpha: f64,
) -> Result<ComplexMatrix> {
    if !(0.0..=1.0).contains(&alpha) || !alpha.is_finite() {
        return Err(Error::AlphaOutOfRange { alpha });
    }
    if a.dim() != x.dim() || b.dim() != x.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: x.dim().max(b.dim()),
        });
    }
    let sa = psd_spectrum(a)?;
    let sb = psd_spectrum(b)?;
    let a_alpha = sa.recompose_with(|l| pow_conv(l, alpha));
    let a_comp = sa.recompose_with(|l| pow_conv(l, 1.0 - alpha));
    let b_alpha = sb.recompose_with(|l| pow_conv(l, alpha));
    let b_comp = sb.recompose_with(|l| pow_conv(l, 1.0 - alpha));
    let first = a_alpha.matmul(x)?.matmul(&b_comp)?;
    let second = a_comp.matmul(x)?.matmul(&b_alpha)?;
    Ok(first.add(&second)?.scale_re(0.5))
}

/// Min over sampled unit vectors of ‖A²x‖ − ‖Ax‖². The sample sequence
/// starts with the standard basis, then seeded random directions; a
/// nonnegative result is evidence (not proof) of paranormality.
pub fn paranormal_evidence(a: &ComplexMatrix, samples: usize, seed: u64) -> Result<f64> {
    a.ensure_finite("paranormal_evidence input")?;
    if samples == 0 {
        return Err(Error::InvalidConfig("sample count must be >= 1".into()));
    }
    let n = a.dim();
    let a2 = a.matmul(a)?;
    let mut stream = crate::harness::rng::RngStream::new(seed);
    let mut worst = f64::INFINITY;
    for k in 0..samples {
        let x = if k < n {
            Vector::basis(n, k)
        } else {
            crate::harness::rng::random_unit_vector(n, &mut stream)
        };
        let gap = a2.apply(&x)?.norm() - a.apply(&x)?.norm().powi(2);
        worst = worst.min(gap);
    }
    Ok(worst)
}

/// ‖T‖ lifted through the polar modulus, used by invariant tests.
pub fn modulus_squared_residual(t: &ComplexMatrix, factors: &PolarFactors) -> f64 {
    let gram = t.adjoint().matmul(t).expect("same dim");
    let sq = factors.modulus.matmul(&factors.modulus).expect("same dim");
    sq.sub(&gram).expect("same dim").frobenius_norm()
}

/// Rank-cutoff shared with the SVD backend, re-exported for tests.
pub const POLAR_RANK_CUTOFF: f64 = RANK_CUTOFF;
