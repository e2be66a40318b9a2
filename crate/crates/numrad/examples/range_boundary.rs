//! Boundary of the numerical range via supporting lines: for each angle θ
//! the top eigenvector of Re(e^{iθ}A) realizes a boundary point ⟨Ax, x⟩.
//!
//! ```bash
//! cargo run --release -p numrad --example range_boundary
//! ```

use numrad::harness::{generate, OperatorClass, RngStream};
use numrad::linalg::ComplexMatrix;
use numrad::numrange::{numerical_radius, numerical_range_boundary};

fn main() {
    // the Jordan block's range is the disk of radius 1/2 centered at 0
    let jordan = ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
    let pts = numerical_range_boundary(&jordan, 16).unwrap();
    println!("Jordan block boundary (16 supporting lines):");
    println!("theta,re,im,modulus");
    for p in &pts {
        println!(
            "{:.4},{:+.6},{:+.6},{:.6}",
            p.theta,
            p.point.re,
            p.point.im,
            p.point.norm()
        );
    }

    // a random operator: boundary moduli never exceed the certified radius
    let mut stream = RngStream::new(11);
    let a = generate(OperatorClass::Ginibre, 5, &mut stream).unwrap();
    let est = numerical_radius(&a, 1e-9).unwrap();
    let pts = numerical_range_boundary(&a, 360).unwrap();
    let max_mod = pts.iter().map(|p| p.point.norm()).fold(0.0f64, f64::max);
    println!("\nrandom ginibre(5): 360 boundary points");
    println!("  max boundary modulus = {max_mod:.10}");
    println!(
        "  certified radius      = [{:.10}, {:.10}]",
        est.value,
        est.value + est.certified_error
    );

    // normal operators: the range is the convex hull of the spectrum
    let d = ComplexMatrix::from_real(2, &[0.0, 0.0, 0.0, 1.0]).unwrap();
    let pts = numerical_range_boundary(&d, 8).unwrap();
    println!("\ndiag(0, 1): boundary collapses onto the segment [0, 1]");
    for p in &pts {
        println!("  θ = {:.3} → {:+.4}{:+.4}i", p.theta, p.point.re, p.point.im);
    }
}
