//! Certified numerical radius: two-sided enclosures, the maximizing angle,
//! and a witness vector, cross-checked against the dense-grid oracle.
//!
//! ```bash
//! cargo run --release -p numrad --example radius_certificate
//! ```

use numrad::harness::{generate, OperatorClass, RngStream};
use numrad::linalg::{operator_norm, ComplexMatrix};
use numrad::numrange::{numerical_radius, radius_dense_oracle, rayleigh};

fn show(label: &str, m: &ComplexMatrix) {
    let norm = operator_norm(m).unwrap();
    println!("{label} (n = {}, ‖A‖ = {:.6})", m.dim(), norm);
    for tol in [1e-4, 1e-8, 1e-11] {
        let est = numerical_radius(m, tol).unwrap();
        println!(
            "  tol {tol:>7.0e}: w ∈ [{:.12}, {:.12}] at θ* = {:.6}",
            est.value,
            est.value + est.certified_error,
            est.theta_star
        );
    }
    let est = numerical_radius(m, 1e-10).unwrap();
    let oracle = radius_dense_oracle(m, 100_000).unwrap();
    println!("  dense oracle (1e5 angles): {oracle:.12}");
    let quotient = rayleigh(m, &est.witness).unwrap();
    println!(
        "  witness Rayleigh quotient: |⟨Aw, w⟩| = {:.12} (≥ value − 1e−12)",
        quotient.norm()
    );
    println!(
        "  sandwich: ‖A‖/2 = {:.6} ≤ w ≤ ‖A‖ = {:.6}\n",
        0.5 * norm,
        norm
    );
}

fn main() {
    // the 2×2 Jordan block: numerical range is the closed disk of radius 1/2
    let jordan = ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
    show("Jordan block [[0,1],[0,0]]", &jordan);

    // self-adjoint: w(A) = ‖A‖ exactly
    let herm = ComplexMatrix::from_real(2, &[1.0, 0.0, 0.0, -3.0]).unwrap();
    show("diag(1, −3)", &herm);

    // a generic random operator
    let mut stream = RngStream::new(7);
    let g = generate(OperatorClass::Ginibre, 6, &mut stream).unwrap();
    show("random ginibre(6)", &g);
}
