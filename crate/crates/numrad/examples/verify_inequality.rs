//! Single-checker runs: lhs/rhs with slack, hypothesis gating, and
//! multi-link chains.
//!
//! ```bash
//! cargo run --release -p numrad --example verify_inequality
//! ```

use numrad::harness::{generate, OperatorClass, RngStream};
use numrad::inequalities::{check, registry, CheckParams, Operands};
use numrad::linalg::ComplexMatrix;

fn print_results(results: &[numrad::inequalities::CheckResult]) {
    for r in results {
        println!(
            "  {:<24} lhs = {:<22.15e} rhs = {:<22.15e} slack = {:+.3e} {}",
            r.display_id(),
            r.lhs,
            r.rhs,
            r.slack,
            if r.satisfied { "OK" } else { "VIOLATION" }
        );
    }
}

fn main() {
    println!("registry ({} entries):", registry().len());
    for def in registry() {
        println!("  {} ({}) — {}", def.id, def.alias, def.description);
    }

    // the product-split bound at its equality point A = B = I
    let mut ops = Operands::with_a(ComplexMatrix::identity(3));
    ops.b = Some(ComplexMatrix::identity(3));
    println!("\nR11 at A = B = I (equality case):");
    print_results(&check("R11", &ops, &CheckParams::with_r(1.0), 1e-8).unwrap());

    // a full multi-link chain on random positive operands
    let mut stream = RngStream::new(19);
    let mut ops = Operands::with_a(generate(OperatorClass::PsdInvertible, 4, &mut stream).unwrap());
    ops.b = Some(generate(OperatorClass::PsdInvertible, 4, &mut stream).unwrap());
    ops.x = Some(generate(OperatorClass::Ginibre, 4, &mut stream).unwrap());
    let params = CheckParams {
        r: Some(2.0),
        alpha: Some(0.25),
        ..CheckParams::default()
    };
    println!("\nR17 Heinz chain on random positive operands (r = 2, α = 0.25):");
    print_results(&check("R17", &ops, &params, 1e-8).unwrap());

    // hypothesis gating: r = 1.5 violates the r ≥ 2 requirement of R16
    let bad = CheckParams {
        r: Some(1.5),
        alpha: Some(0.25),
        ..CheckParams::default()
    };
    println!("\nR16 with r = 1.5 (hypothesis not met):");
    match check("R16", &ops, &bad, 1e-8) {
        Err(e) => println!("  rejected: {e}"),
        Ok(_) => unreachable!("gate must reject r < 2"),
    }

    // the power refinement on the Jordan block: w² = 1/4 ≤ (0 + 1)/2
    let jordan = Operands::with_a(ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]).unwrap());
    println!("\nR05 on the Jordan block (r = 1):");
    print_results(&check("R05", &jordan, &CheckParams::with_r(1.0), 1e-8).unwrap());
}
