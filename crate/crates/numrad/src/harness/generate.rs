//! Seeded random operator generators across structured classes.
//!
//! Every class is constructed so that `classify` certifies it at 1e-10
//! relative tolerance; the sweep re-checks this before use.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harness::rng::RngStream;
use crate::linalg::{hermitian_eig, operator_norm, ComplexMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OperatorClass {
    Ginibre,
    Hermitian,
    Psd,
    PsdInvertible,
    Unitary,
    Normal,
    Nilpotent,
    HermitianInvertible,
    RankDeficient,
    Contraction,
}

impl OperatorClass {
    pub const ALL: [OperatorClass; 10] = [
        OperatorClass::Ginibre,
        OperatorClass::Hermitian,
        OperatorClass::Psd,
        OperatorClass::PsdInvertible,
        OperatorClass::Unitary,
        OperatorClass::Normal,
        OperatorClass::Nilpotent,
        OperatorClass::HermitianInvertible,
        OperatorClass::RankDeficient,
        OperatorClass::Contraction,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            OperatorClass::Ginibre => "ginibre",
            OperatorClass::Hermitian => "hermitian",
            OperatorClass::Psd => "psd",
            OperatorClass::PsdInvertible => "psd_invertible",
            OperatorClass::Unitary => "unitary",
            OperatorClass::Normal => "normal",
            OperatorClass::Nilpotent => "nilpotent",
            OperatorClass::HermitianInvertible => "hermitian_invertible",
            OperatorClass::RankDeficient => "rank_deficient",
            OperatorClass::Contraction => "contraction",
        }
    }

    pub fn parse(tag: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|c| c.tag() == tag)
    }
}

impl std::fmt::Display for OperatorClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

fn ginibre(n: usize, stream: &mut RngStream) -> ComplexMatrix {
    let data = (0..n * n).map(|_| stream.next_complex_gaussian()).collect();
    ComplexMatrix::from_flat(n, data).expect("finite gaussian entries")
}

fn hermitian(n: usize, stream: &mut RngStream) -> ComplexMatrix {
    // (G + G*)/2 with the mirror assigned exactly
    ginibre(n, stream).symmetrize()
}

fn psd(n: usize, stream: &mut RngStream) -> ComplexMatrix {
    let g = ginibre(n, stream);
    g.adjoint()
        .matmul(&g)
        .expect("same dim")
        .scale_re(1.0 / n as f64)
        .symmetrize()
}

/// Modified Gram–Schmidt with one re-orthogonalization pass, then a phase
/// fix that makes the diagonal real nonnegative.
fn unitary(n: usize, stream: &mut RngStream) -> ComplexMatrix {
    let g = ginibre(n, stream);
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|j| (0..n).map(|i| g.get(i, j)).collect())
        .collect();
    for j in 0..n {
        for _ in 0..2 {
            for k in 0..j {
                let proj: Complex64 = (0..n).map(|i| cols[k][i].conj() * cols[j][i]).sum();
                for i in 0..n {
                    let sub = cols[k][i] * proj;
                    cols[j][i] -= sub;
                }
            }
        }
        let norm: f64 = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for i in 0..n {
            cols[j][i] /= norm;
        }
    }
    let mut q = ComplexMatrix::zeros(n);
    for j in 0..n {
        let djj = cols[j][j];
        let phase = if djj.norm() > 1e-300 {
            (djj / djj.norm()).conj()
        } else {
            Complex64::new(1.0, 0.0)
        };
        for i in 0..n {
            q.set(i, j, cols[j][i] * phase);
        }
    }
    q
}

fn normal(n: usize, stream: &mut RngStream) -> ComplexMatrix {
    let u = unitary(n, stream);
    let d: Vec<Complex64> = (0..n).map(|_| stream.next_complex_gaussian()).collect();
    // U diag(d) U*
    let mut scaled = u.clone();
    for j in 0..n {
        for i in 0..n {
            scaled.set(i, j, u.get(i, j) * d[j]);
        }
    }
    scaled.matmul(&u.adjoint()).expect("same dim")
}

fn nilpotent(n: usize, stream: &mut RngStream) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n);
    for i in 0..n {
        for j in (i + 1)..n {
            m.set(i, j, stream.next_complex_gaussian());
        }
    }
    m
}

fn hermitian_invertible(n: usize, stream: &mut RngStream) -> ComplexMatrix {
    let v = unitary(n, stream);
    let mut scaled = v.clone();
    for j in 0..n {
        let magnitude = stream.next_range(0.1, 1.0);
        let sign = if stream.next_bool() { 1.0 } else { -1.0 };
        let lambda = sign * magnitude;
        for i in 0..n {
            scaled.set(i, j, v.get(i, j) * lambda);
        }
    }
    scaled.matmul(&v.adjoint()).expect("same dim").symmetrize()
}

fn rank_deficient(n: usize, stream: &mut RngStream) -> Result<ComplexMatrix> {
    let p = psd(n, stream);
    let mut spec = hermitian_eig(&p)?;
    // eigenvalues come back ascending: zero the smallest ⌊n/2⌋ and clamp
    // roundoff negativity in the survivors
    for (i, l) in spec.eigenvalues.iter_mut().enumerate() {
        if i < n / 2 || *l < 0.0 {
            *l = 0.0;
        }
    }
    Ok(spec.recompose_with(|l| l))
}

fn contraction(n: usize, stream: &mut RngStream) -> Result<ComplexMatrix> {
    let g = ginibre(n, stream);
    let norm = operator_norm(&g)?;
    if norm == 0.0 {
        return Ok(g);
    }
    Ok(g.scale_re(0.9 / norm))
}

/// Draw one matrix of the given class from the stream.
pub fn generate(class: OperatorClass, n: usize, stream: &mut RngStream) -> Result<ComplexMatrix> {
    if n == 0 {
        return Err(Error::InvalidConfig("dimension must be >= 1".into()));
    }
    match class {
        OperatorClass::Ginibre => Ok(ginibre(n, stream)),
        OperatorClass::Hermitian => Ok(hermitian(n, stream)),
        OperatorClass::Psd => Ok(psd(n, stream)),
        OperatorClass::PsdInvertible => {
            let p = psd(n, stream);
            Ok(p.add(&ComplexMatrix::identity(n).scale_re(0.1))
                .expect("same dim"))
        }
        OperatorClass::Unitary => Ok(unitary(n, stream)),
        OperatorClass::Normal => Ok(normal(n, stream)),
        OperatorClass::Nilpotent => Ok(nilpotent(n, stream)),
        OperatorClass::HermitianInvertible => Ok(hermitian_invertible(n, stream)),
        OperatorClass::RankDeficient => rank_deficient(n, stream),
        OperatorClass::Contraction => contraction(n, stream),
    }
}

/// Does `flags` certify membership in `class`?
pub fn class_certified(class: OperatorClass, flags: &crate::linalg::StructureFlags) -> bool {
    match class {
        OperatorClass::Ginibre | OperatorClass::Contraction | OperatorClass::Nilpotent => true,
        OperatorClass::Hermitian => flags.hermitian,
        OperatorClass::Psd | OperatorClass::RankDeficient => flags.hermitian && flags.psd,
        OperatorClass::PsdInvertible => flags.hermitian && flags.psd && flags.invertible,
        OperatorClass::Unitary => flags.unitary && flags.normal && flags.invertible,
        OperatorClass::Normal => flags.normal,
        OperatorClass::HermitianInvertible => flags.hermitian && flags.invertible,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{classify, sigma_min};

    #[test]
    fn hermitian_is_exactly_symmetric() {
        let mut s = RngStream::new(1);
        let a = generate(OperatorClass::Hermitian, 4, &mut s).unwrap();
        assert_eq!(a.sub(&a.adjoint()).unwrap().frobenius_norm(), 0.0);
    }

    #[test]
    fn unitary_gram_is_identity() {
        let mut s = RngStream::new(2);
        let u = generate(OperatorClass::Unitary, 3, &mut s).unwrap();
        let gram = u.adjoint().matmul(&u).unwrap();
        let residual = gram.sub(&ComplexMatrix::identity(3)).unwrap().frobenius_norm();
        assert!(residual <= 1e-10, "residual {residual}");
    }

    #[test]
    fn nilpotent_two_by_two_squares_to_zero() {
        let mut s = RngStream::new(3);
        let a = generate(OperatorClass::Nilpotent, 2, &mut s).unwrap();
        let sq = a.matmul(&a).unwrap();
        assert_eq!(sq.frobenius_norm(), 0.0);
    }

    #[test]
    fn every_class_passes_its_certificate() {
        let mut s = RngStream::new(77);
        for &class in &OperatorClass::ALL {
            for n in [1usize, 2, 3, 5, 8] {
                let a = generate(class, n, &mut s).unwrap();
                let flags = classify(&a, 1e-10).unwrap();
                assert!(
                    class_certified(class, &flags),
                    "class {class} n={n} got {flags}"
                );
            }
        }
    }

    #[test]
    fn hermitian_invertible_is_well_conditioned() {
        let mut s = RngStream::new(8);
        for n in [2usize, 4, 8] {
            let a = generate(OperatorClass::HermitianInvertible, n, &mut s).unwrap();
            assert!(sigma_min(&a).unwrap() >= 0.1 - 1e-9);
            assert!(operator_norm(&a).unwrap() <= 1.0 + 1e-9);
        }
    }

    #[test]
    fn contraction_norm_is_nine_tenths() {
        let mut s = RngStream::new(9);
        let a = generate(OperatorClass::Contraction, 5, &mut s).unwrap();
        assert!((operator_norm(&a).unwrap() - 0.9).abs() < 1e-10);
    }

    #[test]
    fn rank_deficient_has_null_space() {
        let mut s = RngStream::new(10);
        let a = generate(OperatorClass::RankDeficient, 6, &mut s).unwrap();
        let spec = hermitian_eig(&a).unwrap();
        let zeros = spec.eigenvalues.iter().filter(|l| l.abs() < 1e-10).count();
        assert!(zeros >= 3, "expected >= 3 zero eigenvalues, got {zeros}");
        assert!(spec.eigenvalues[0] > -1e-10);
    }
}
