//! Structural classification of operators, the precondition gate used by the
//! inequality checkers.

use crate::error::Result;
use crate::linalg::eig::hermitian_eig;
use crate::linalg::matrix::ComplexMatrix;
use crate::linalg::svd::{operator_norm, sigma_min};

/// Structure flags; each is true iff the defining residual clears the
/// tolerance relative to max(1, ‖A‖).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StructureFlags {
    pub hermitian: bool,
    pub psd: bool,
    pub normal: bool,
    pub unitary: bool,
    pub invertible: bool,
}

impl std::fmt::Display for StructureFlags {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut names = Vec::new();
        if self.hermitian {
            names.push("hermitian");
        }
        if self.psd {
            names.push("psd");
        }
        if self.normal {
            names.push("normal");
        }
        if self.unitary {
            names.push("unitary");
        }
        if self.invertible {
            names.push("invertible");
        }
        write!(f, "{{{}}}", names.join(", "))
    }
}

pub fn classify(a: &ComplexMatrix, tol: f64) -> Result<StructureFlags> {
    a.ensure_finite("classify input")?;
    let n = a.dim();
    let norm = operator_norm(a)?;
    let scale = norm.max(1.0);
    let thresh = tol * scale;

    let hermitian = a.sub(&a.adjoint())?.frobenius_norm() <= thresh;

    let psd = if hermitian {
        let spec = hermitian_eig(a)?;
        spec.eigenvalues[0] >= -thresh
    } else {
        false
    };

    let commutator = a
        .matmul(&a.adjoint())?
        .sub(&a.adjoint().matmul(a)?)?;
    let normal = commutator.frobenius_norm() <= thresh;

    let gram_minus_id = a
        .adjoint()
        .matmul(a)?
        .sub(&ComplexMatrix::identity(n))?;
    let unitary = gram_minus_id.frobenius_norm() <= thresh;

    let invertible = sigma_min(a)? > thresh;

    Ok(StructureFlags {
        hermitian,
        psd,
        normal,
        unitary,
        invertible,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    const TOL: f64 = 1e-10;

    #[test]
    fn identity_has_every_flag() {
        let f = classify(&ComplexMatrix::identity(3), TOL).unwrap();
        assert_eq!(
            f,
            StructureFlags {
                hermitian: true,
                psd: true,
                normal: true,
                unitary: true,
                invertible: true,
            }
        );
    }

    #[test]
    fn jordan_block_has_none() {
        let j = ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        let f = classify(&j, TOL).unwrap();
        assert_eq!(f, StructureFlags::default());
    }

    #[test]
    fn diagonal_unitary_not_hermitian() {
        let m = ComplexMatrix::diagonal(&[Complex64::new(0.0, 1.0), Complex64::new(1.0, 0.0)]);
        let f = classify(&m, TOL).unwrap();
        assert!(f.normal && f.unitary && f.invertible);
        assert!(!f.hermitian && !f.psd);
    }

    #[test]
    fn indefinite_hermitian_is_not_psd() {
        let m = ComplexMatrix::from_real(2, &[1.0, 0.0, 0.0, -2.0]).unwrap();
        let f = classify(&m, TOL).unwrap();
        assert!(f.hermitian && !f.psd && f.invertible);
    }
}
