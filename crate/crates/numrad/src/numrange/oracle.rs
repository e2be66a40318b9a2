//! Independent lower-bound routes for the numerical radius: the dense-grid
//! oracle used by the acceptance suite, the defining Rayleigh form, and a
//! seeded sampling bound.

use crate::error::{Error, Result};
use crate::harness::rng::{random_unit_vector, RngStream};
use crate::linalg::eig::{lambda_max_bracket, TridiagWorkspace};
use crate::linalg::matrix::{ComplexMatrix, Vector};
use crate::numrange::radius::numerical_radius;
use num_complex::Complex64;

/// Brute-force sweep: max over N uniformly spaced angles of
/// λ_max(Re(e^{iθ}A)). A lower bound on w(A) with gap at most π‖A‖/N.
pub fn radius_dense_oracle(a: &ComplexMatrix, n_angles: usize) -> Result<f64> {
    a.ensure_finite("radius_dense_oracle input")?;
    if n_angles < 4 {
        return Err(Error::InvalidConfig(
            "dense oracle needs at least 4 angles".into(),
        ));
    }
    let step = std::f64::consts::TAU / n_angles as f64;
    let mut ws = TridiagWorkspace::new();
    let mut h = ComplexMatrix::zeros(a.dim());
    let mut best = f64::NEG_INFINITY;
    for k in 0..n_angles {
        a.rotated_hermitian_part_into(step * k as f64, &mut h);
        let (lo, _) = lambda_max_bracket(&h, &mut ws);
        if lo > best {
            best = lo;
        }
    }
    Ok(best.max(0.0))
}

/// The defining form ⟨Ax, x⟩ for a unit vector x.
pub fn rayleigh(a: &ComplexMatrix, x: &Vector) -> Result<Complex64> {
    if !x.is_finite() {
        return Err(Error::NonFinite {
            context: "rayleigh vector",
        });
    }
    let norm = x.norm();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(Error::NotUnit { norm });
    }
    Ok(a.apply(x)?.inner(x))
}

/// Max |⟨Axᵢ, xᵢ⟩| over k seeded random unit vectors plus the eigenvector of
/// Re(e^{iθ*}A); a valid lower bound on w(A).
pub fn radius_lower_bound_sampling(a: &ComplexMatrix, k: usize, seed: u64) -> Result<f64> {
    a.ensure_finite("radius_lower_bound_sampling input")?;
    if k == 0 {
        return Err(Error::InvalidConfig("sample count must be >= 1".into()));
    }
    let n = a.dim();
    let mut stream = RngStream::new(seed);
    let mut best = 0.0f64;
    for _ in 0..k {
        let x = random_unit_vector(n, &mut stream);
        let v = a.apply(&x)?.inner(&x).norm();
        if v > best {
            best = v;
        }
    }
    let scale = a.scale_floor();
    let est = numerical_radius(a, 1e-8 * scale)?;
    let witness_value = a.apply(&est.witness)?.inner(&est.witness).norm();
    Ok(best.max(witness_value))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jordan2() -> ComplexMatrix {
        ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]).unwrap()
    }

    #[test]
    fn oracle_fixed_cases() {
        assert!((radius_dense_oracle(&ComplexMatrix::identity(2), 4).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(radius_dense_oracle(&ComplexMatrix::zeros(3), 64).unwrap(), 0.0);
        let v = radius_dense_oracle(&jordan2(), 100_000).unwrap();
        assert!((v - 0.5).abs() < 1e-4);
        assert!(matches!(
            radius_dense_oracle(&jordan2(), 3),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn rayleigh_fixed_cases() {
        let x = Vector::from_real(&[std::f64::consts::FRAC_1_SQRT_2, std::f64::consts::FRAC_1_SQRT_2]);
        let v = rayleigh(&jordan2(), &x).unwrap();
        assert!((v - Complex64::new(0.5, 0.0)).norm() < 1e-12);

        let m = ComplexMatrix::from_real(2, &[1.0, 0.0, 0.0, -3.0]).unwrap();
        let e2 = Vector::basis(2, 1);
        assert!((rayleigh(&m, &e2).unwrap() - Complex64::new(-3.0, 0.0)).norm() < 1e-12);

        let id = ComplexMatrix::identity(2);
        assert!((rayleigh(&id, &x).unwrap() - Complex64::new(1.0, 0.0)).norm() < 1e-12);

        let not_unit = Vector::from_real(&[2.0, 0.0]);
        assert!(matches!(
            rayleigh(&id, &not_unit),
            Err(Error::NotUnit { .. })
        ));
    }

    #[test]
    fn sampling_bound_reaches_radius() {
        // identity: any unit vector already attains w = 1
        let v = radius_lower_bound_sampling(&ComplexMatrix::identity(3), 5, 1).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
        assert_eq!(
            radius_lower_bound_sampling(&ComplexMatrix::zeros(2), 10, 1).unwrap(),
            0.0
        );
        // Jordan block: the witness pushes the sampled bound to 1/2
        let v = radius_lower_bound_sampling(&jordan2(), 10_000, 7).unwrap();
        assert!(v >= 0.499, "sampled lower bound {v}");
        let oracle = radius_dense_oracle(&jordan2(), 100_000).unwrap();
        assert!(v >= oracle - 1e-4);
    }
}
