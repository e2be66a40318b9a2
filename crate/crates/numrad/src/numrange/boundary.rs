//! Boundary points of the numerical range via the supporting-line method:
//! for each angle θ the top eigenvector x_θ of Re(e^{iθ}A) realizes a point
//! ⟨A x_θ, x_θ⟩ on the boundary of the (convex) range.

use crate::error::{Error, Result};
use crate::linalg::eig::hermitian_eig;
use crate::linalg::matrix::ComplexMatrix;
use num_complex::Complex64;

/// One boundary sample: the supporting angle and the attained range point.
#[derive(Debug, Clone, Copy)]
pub struct BoundaryPoint {
    pub theta: f64,
    pub point: Complex64,
}

/// m supporting-line boundary points, ordered by angle.
pub fn numerical_range_boundary(a: &ComplexMatrix, m: usize) -> Result<Vec<BoundaryPoint>> {
    a.ensure_finite("numerical_range_boundary input")?;
    if m < 3 {
        return Err(Error::InvalidConfig(
            "boundary needs at least 3 points".into(),
        ));
    }
    let step = std::f64::consts::TAU / m as f64;
    let mut out = Vec::with_capacity(m);
    for k in 0..m {
        let theta = step * k as f64;
        let h = a.rotated_hermitian_part(theta);
        let spec = hermitian_eig(&h)?;
        let x = spec.top_eigenvector();
        let point = a.apply(&x)?.inner(&x);
        out.push(BoundaryPoint { theta, point });
    }
    Ok(out)
}
