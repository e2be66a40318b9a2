//! Shared evaluation context: memoizes radii, norms and spectral
//! decompositions across the checkers of one operand bundle. Radius
//! certificates are requested at a tenth of the verdict tolerance so solver
//! slack cannot flip a verdict, and the residual certificate width is
//! propagated into each result's tolerance.

use std::collections::HashMap;
use std::rc::Rc;

use crate::error::Result;
use crate::linalg::eig::HermitianSpectrum;
use crate::linalg::matrix::ComplexMatrix;
use crate::linalg::spectral::{pow_conv, psd_spectrum};
use crate::linalg::svd::operator_norm;
use crate::linalg::{classify, hermitian_inverse, StructureFlags};
use crate::numrange::radius::numerical_radius;
use crate::transforms::polar_decompose;

#[derive(Default)]
pub struct CheckContext {
    radius: HashMap<(String, u64), (f64, f64)>,
    norm: HashMap<String, f64>,
    psd: HashMap<String, Rc<HermitianSpectrum>>,
    abs: HashMap<String, Rc<HermitianSpectrum>>,
    polar: HashMap<String, Rc<(ComplexMatrix, HermitianSpectrum)>>,
    inverse: HashMap<String, Rc<ComplexMatrix>>,
    flags: HashMap<String, StructureFlags>,
}

/// Structural flags are certified at this relative tolerance.
pub const CLASSIFY_TOL: f64 = 1e-10;

impl CheckContext {
    pub fn new() -> Self {
        Self::default()
    }

    /// Certified numerical radius at a tenth of the verdict tolerance;
    /// returns (value, certificate width).
    pub fn radius(&mut self, m: &ComplexMatrix, check_tol: f64) -> Result<(f64, f64)> {
        let tol_abs = (0.1 * check_tol * m.scale_floor()).max(1e-12);
        let key = (m.digest(), tol_abs.to_bits());
        if let Some(&hit) = self.radius.get(&key) {
            return Ok(hit);
        }
        let est = numerical_radius(m, tol_abs)?;
        let out = (est.value, est.certified_error);
        self.radius.insert(key, out);
        Ok(out)
    }

    /// w(m)^r together with a rigorous error transfer:
    /// (v + err)^r − v^r bounds the effect of the certificate width.
    pub fn radius_pow(&mut self, m: &ComplexMatrix, r: f64, check_tol: f64) -> Result<(f64, f64)> {
        let (v, err) = self.radius(m, check_tol)?;
        let value = pow_conv(v, r);
        let upper = pow_conv(v + err, r);
        Ok((value, (upper - value).max(0.0)))
    }

    pub fn norm(&mut self, m: &ComplexMatrix) -> Result<f64> {
        let key = m.digest();
        if let Some(&hit) = self.norm.get(&key) {
            return Ok(hit);
        }
        let v = operator_norm(m)?;
        self.norm.insert(key, v);
        Ok(v)
    }

    pub fn flags(&mut self, m: &ComplexMatrix) -> Result<StructureFlags> {
        let key = m.digest();
        if let Some(&hit) = self.flags.get(&key) {
            return Ok(hit);
        }
        let f = classify(m, CLASSIFY_TOL)?;
        self.flags.insert(key, f);
        Ok(f)
    }

    pub fn psd_spec(&mut self, m: &ComplexMatrix) -> Result<Rc<HermitianSpectrum>> {
        let key = m.digest();
        if let Some(hit) = self.psd.get(&key) {
            return Ok(hit.clone());
        }
        let spec = Rc::new(psd_spectrum(m)?);
        self.psd.insert(key, spec.clone());
        Ok(spec)
    }

    /// Spectrum of |m| = (m*m)^{1/2} in its diagonalizing basis.
    pub fn abs_spec(&mut self, m: &ComplexMatrix) -> Result<Rc<HermitianSpectrum>> {
        let key = m.digest();
        if let Some(hit) = self.abs.get(&key) {
            return Ok(hit.clone());
        }
        let gram = m.adjoint().matmul(m)?;
        let mut spec = psd_spectrum(&gram)?;
        for l in spec.eigenvalues.iter_mut() {
            *l = l.sqrt();
        }
        let spec = Rc::new(spec);
        self.abs.insert(key, spec.clone());
        Ok(spec)
    }

    /// P^s for PSD P with the 0⁰ := 0 convention.
    pub fn psd_pow(&mut self, m: &ComplexMatrix, s: f64) -> Result<ComplexMatrix> {
        Ok(self.psd_spec(m)?.recompose_with(|l| pow_conv(l, s)))
    }

    /// |m|^s.
    pub fn abs_pow(&mut self, m: &ComplexMatrix, s: f64) -> Result<ComplexMatrix> {
        Ok(self.abs_spec(m)?.recompose_with(|l| pow_conv(l, s)))
    }

    /// Polar isometry U and the spectrum of the modulus |T|.
    pub fn polar_spec(&mut self, t: &ComplexMatrix) -> Result<Rc<(ComplexMatrix, HermitianSpectrum)>> {
        let key = t.digest();
        if let Some(hit) = self.polar.get(&key) {
            return Ok(hit.clone());
        }
        let factors = polar_decompose(t)?;
        let spec = psd_spectrum(&factors.modulus)?;
        let entry = Rc::new((factors.isometry, spec));
        self.polar.insert(key, entry.clone());
        Ok(entry)
    }

    /// Generalized Aluthge transform |T|^α U |T|^{1−α} from the cached polar
    /// data, zeroing spectrum below the isometry's rank cutoff.
    pub fn aluthge_alpha(&mut self, t: &ComplexMatrix, alpha: f64) -> Result<ComplexMatrix> {
        let entry = self.polar_spec(t)?;
        let (u, spec) = (&entry.0, &entry.1);
        let sigma_max = spec.eigenvalues.iter().cloned().fold(0.0f64, f64::max);
        let cutoff = 1e-10 * sigma_max;
        let left = spec.recompose_with(|l| if l > cutoff { pow_conv(l, alpha) } else { 0.0 });
        let right =
            spec.recompose_with(|l| if l > cutoff { pow_conv(l, 1.0 - alpha) } else { 0.0 });
        left.matmul(u)?.matmul(&right)
    }

    pub fn herm_inverse(&mut self, m: &ComplexMatrix) -> Result<Rc<ComplexMatrix>> {
        let key = m.digest();
        if let Some(hit) = self.inverse.get(&key) {
            return Ok(hit.clone());
        }
        let inv = Rc::new(hermitian_inverse(m)?);
        self.inverse.insert(key, inv.clone());
        Ok(inv)
    }
}
