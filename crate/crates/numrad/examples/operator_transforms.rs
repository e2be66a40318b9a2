//! Operator transforms: polar decomposition, the Aluthge transform and its
//! generalized family, Heinz means, and paranormality probing.
//!
//! ```bash
//! cargo run --release -p numrad --example operator_transforms
//! ```

use numrad::harness::{generate, OperatorClass, RngStream};
use numrad::linalg::{operator_norm, ComplexMatrix};
use numrad::numrange::numerical_radius;
use numrad::transforms::{
    aluthge, aluthge_general, heinz_mean, paranormal_evidence, polar_decompose, power_pair,
};

fn main() {
    let mut stream = RngStream::new(3);
    let t = generate(OperatorClass::Ginibre, 4, &mut stream).unwrap();

    // polar factors T = U·|T|
    let f = polar_decompose(&t).unwrap();
    let residual = f
        .isometry
        .matmul(&f.modulus)
        .unwrap()
        .sub(&t)
        .unwrap()
        .frobenius_norm();
    println!("polar decomposition of ginibre(4):");
    println!("  ‖U|T| − T‖_F = {residual:.2e}");

    // the Aluthge family interpolates between U|T| and |T|U
    println!("\ngeneralized Aluthge transforms |T|^α U |T|^{{1−α}}:");
    let w_t = numerical_radius(&t, 1e-9).unwrap().value;
    let norm_t = operator_norm(&t).unwrap();
    println!("  w(T) = {w_t:.8}, ‖T‖ = {norm_t:.8}");
    for alpha in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let tilde = aluthge_general(&t, alpha).unwrap();
        let w = numerical_radius(&tilde, 1e-9).unwrap().value;
        println!("  α = {alpha:.2}: w(T̃(α)) = {w:.8}");
    }
    let half = aluthge(&t).unwrap();
    let agree = half
        .sub(&aluthge_general(&t, 0.5).unwrap())
        .unwrap()
        .frobenius_norm();
    println!("  α = 1/2 agrees with the Aluthge transform to {agree:.1e}");
    println!("  w(T̃) = {:.8} ≤ ‖T‖ ✓", numerical_radius(&half, 1e-9).unwrap().value);

    // Heinz means for positive operands
    let a = generate(OperatorClass::PsdInvertible, 4, &mut stream).unwrap();
    let b = generate(OperatorClass::PsdInvertible, 4, &mut stream).unwrap();
    let x = generate(OperatorClass::Ginibre, 4, &mut stream).unwrap();
    println!("\nHeinz means H_α = (A^α X B^{{1−α}} + A^{{1−α}} X B^α)/2:");
    for alpha in [0.0, 0.25, 0.5] {
        let h1 = heinz_mean(&a, &x, &b, alpha).unwrap();
        let h2 = heinz_mean(&a, &x, &b, 1.0 - alpha).unwrap();
        let sym = h1.sub(&h2).unwrap().frobenius_norm();
        let w = numerical_radius(&h1, 1e-9).unwrap().value;
        println!("  α = {alpha:.2}: w(H_α) = {w:.8}, α ↔ 1−α symmetry residual {sym:.1e}");
    }

    // multiplicative function pairs f·g = id
    let pair = power_pair(0.3).unwrap();
    println!("\npower pair {}: f(2)·g(2) = {}", pair.description, (pair.f)(2.0) * (pair.g)(2.0));

    // paranormality: normal operators pass, the Jordan block fails at e2
    let normal = generate(OperatorClass::Normal, 4, &mut stream).unwrap();
    let jordan = ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
    println!("\nparanormality evidence min ‖A²x‖ − ‖Ax‖² over samples:");
    println!("  normal(4):    {:+.3e}", paranormal_evidence(&normal, 200, 1).unwrap());
    println!("  Jordan block: {:+.3e}", paranormal_evidence(&jordan, 16, 1).unwrap());
}
