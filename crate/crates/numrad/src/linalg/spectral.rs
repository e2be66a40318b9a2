//! Spectral calculus on positive semidefinite matrices: fractional powers,
//! scalar functions, and the operator absolute value |A| = (A*A)^{1/2}.
//!
//! Power conventions: λ⁰ := 1 for λ > 0 and 0⁰ := 0, so P⁰ is the orthogonal
//! projection onto range(P). Eigenvalues in [-1e-10·‖P‖, 0) are treated as
//! roundoff and clamped to zero; anything more negative is rejected.

use crate::error::{Error, Result};
use crate::linalg::eig::{hermitian_eig, HermitianSpectrum};
use crate::linalg::matrix::ComplexMatrix;

/// Relative floor separating roundoff negativity from indefinite input.
pub const PSD_CLAMP: f64 = 1e-10;

/// Eigendecompose a PSD matrix with the clamping convention. Exposed so
/// callers evaluating many functions of the same operand can reuse one
/// decomposition.
pub fn psd_spectrum(p: &ComplexMatrix) -> Result<HermitianSpectrum> {
    let mut spec = hermitian_eig(p)?;
    let norm = spec
        .eigenvalues
        .iter()
        .fold(0.0f64, |m, &l| m.max(l.abs()));
    let floor = -PSD_CLAMP * norm;
    for l in spec.eigenvalues.iter_mut() {
        if *l < 0.0 {
            if *l < floor {
                return Err(Error::NotPositive {
                    min_eig: *l,
                    floor,
                });
            }
            *l = 0.0;
        }
    }
    Ok(spec)
}

/// λ^s with the 0⁰ := 0 range-projection convention: P⁰ projects onto
/// range(P) instead of picking up the kernel.
pub fn pow_conv(lambda: f64, s: f64) -> f64 {
    if lambda == 0.0 {
        0.0
    } else if s == 0.0 {
        1.0
    } else {
        lambda.powf(s)
    }
}

/// P^s for PSD P and s ≥ 0.
pub fn matrix_power_psd(p: &ComplexMatrix, s: f64) -> Result<ComplexMatrix> {
    if !s.is_finite() || s < 0.0 {
        return Err(Error::OutOfRange {
            value: s,
            lo: 0.0,
            hi: f64::INFINITY,
        });
    }
    let spec = psd_spectrum(p)?;
    Ok(spec.recompose_with(|l| pow_conv(l, s)))
}

/// f(P) for PSD P and f nonnegative on the spectrum.
pub fn apply_scalar_function_psd(
    p: &ComplexMatrix,
    f: impl Fn(f64) -> f64,
) -> Result<ComplexMatrix> {
    let spec = psd_spectrum(p)?;
    for &l in &spec.eigenvalues {
        let v = f(l);
        if !v.is_finite() {
            return Err(Error::NonFinite {
                context: "scalar function value",
            });
        }
        if v < 0.0 {
            return Err(Error::FunctionNegative { value: v, at: l });
        }
    }
    Ok(spec.recompose_with(f))
}

/// |A| = (A*A)^{1/2}.
pub fn absolute_value(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let gram = a.adjoint().matmul(a)?;
    matrix_power_psd(&gram, 0.5)
}

/// Spectrum of |A| paired with the diagonalizing basis: eigenvalues are the
/// clamped square roots of the Gram spectrum. Lets callers build f(|A|) for
/// many f from one decomposition.
pub fn abs_spectrum(a: &ComplexMatrix) -> Result<HermitianSpectrum> {
    let gram = a.adjoint().matmul(a)?;
    let mut spec = psd_spectrum(&gram)?;
    for l in spec.eigenvalues.iter_mut() {
        *l = l.sqrt();
    }
    Ok(spec)
}

/// Inverse of an invertible Hermitian matrix through its spectrum.
pub fn hermitian_inverse(h: &ComplexMatrix) -> Result<ComplexMatrix> {
    let spec = hermitian_eig(h)?;
    let scale = spec
        .eigenvalues
        .iter()
        .fold(0.0f64, |m, &l| m.max(l.abs()));
    let floor = 1e-12 * scale.max(1.0);
    for &l in &spec.eigenvalues {
        if l.abs() < floor {
            return Err(Error::Singular { sigma_min: l.abs() });
        }
    }
    Ok(spec.recompose_with(|l| 1.0 / l))
}
