//! Certified violations: the harness as a falsification instrument.
//!
//! Two statements in the registry carry machine-found counterexamples and
//! are reported without gating the sweep's exit code. This example replays
//! both witnesses and shows the certificates that make the violations
//! rigorous rather than numerical noise.
//!
//! ```bash
//! cargo run --release -p numrad --example violation_hunting
//! ```

use numrad::inequalities::{check, is_gating, CheckParams, Operands};
use numrad::linalg::{psd_spectrum, ComplexMatrix};
use numrad::numrange::{numerical_radius, radius_dense_oracle};

fn main() {
    // --- R18: w(X) ≤ w((AXB⁻¹ + A⁻¹XB)/2) fails for indefinite A ---
    // A = diag(1, −1), B = I, X = the rank-one all-ones matrix. The mean
    // collapses to a nilpotent matrix with radius 1 while w(X) = 2.
    let a = ComplexMatrix::from_real(2, &[1.0, 0.0, 0.0, -1.0]).unwrap();
    let b = ComplexMatrix::identity(2);
    let x = ComplexMatrix::from_real(2, &[1.0, 1.0, 1.0, 1.0]).unwrap();
    let mut ops = Operands::with_a(a);
    ops.b = Some(b);
    ops.x = Some(x);
    let res = check("R18", &ops, &CheckParams::none(), 1e-8).unwrap();
    println!("R18 witness (indefinite A):");
    println!(
        "  w(X) = {}  vs  w(mean) = {}  → slack {:+.6}  {}",
        res[0].lhs,
        res[0].rhs,
        res[0].slack,
        if res[0].satisfied { "OK" } else { "VIOLATION" }
    );
    println!("  gates the sweep: {}", is_gating("R18", ""));

    // --- R17 first link: w(A^{1/2}XB^{1/2}) ≤ w(H_α) fails for A ≠ B ---
    // A wide-spectrum positive pair found by the stress falsifier. The
    // violation is certified: the solver's lower bound for the left radius
    // exceeds its upper bound for the right one by ≈ 0.219.
    let a = ComplexMatrix::from_json(
        r#"{"n":3,"entries":[[[3.1602539141526544,0.0],[-8.144900771409132,-1.8067062407157066],[1.6977386598143636,2.3817432243913874]],[[-8.144900771409132,1.8067062407157066],[26.25591007558023,0.0],[-5.484045184395326,-6.899289952992769]],[[1.6977386598143636,-2.3817432243913874],[-5.484045184395326,6.899289952992769],[3.4733972525881183,0.0]]]}"#,
    )
    .unwrap();
    let b = ComplexMatrix::from_json(
        r#"{"n":3,"entries":[[[12.120779446813057,0.0],[-13.553235915460679,-7.837730404406127],[17.733106834314682,1.641879612610296]],[[-13.553235915460679,7.837730404406127],[21.572094637883243,0.0],[-21.981795362407887,9.909686997805473]],[[17.733106834314682,-1.641879612610296],[-21.981795362407887,-9.909686997805473],[27.139355465301175,0.0]]]}"#,
    )
    .unwrap();
    let x = ComplexMatrix::from_json(
        r#"{"n":3,"entries":[[[0.0,0.0],[-0.6738266184154055,-0.40324495787552966],[-0.49685380583010735,0.7637409133434522]],[[0.0,0.0],[0.0,0.0],[-1.9842625091750836,1.7389528302068928]],[[0.0,0.0],[0.0,0.0],[0.0,0.0]]]}"#,
    )
    .unwrap();

    let sa = psd_spectrum(&a).unwrap();
    let sb = psd_spectrum(&b).unwrap();
    let alpha = 0.1;
    let geo = sa
        .recompose_with(|l| l.sqrt())
        .matmul(&x)
        .unwrap()
        .matmul(&sb.recompose_with(|l| l.sqrt()))
        .unwrap();
    let heinz = sa
        .recompose_with(|l| l.powf(alpha))
        .matmul(&x)
        .unwrap()
        .matmul(&sb.recompose_with(|l| l.powf(1.0 - alpha)))
        .unwrap()
        .add(
            &sa.recompose_with(|l| l.powf(1.0 - alpha))
                .matmul(&x)
                .unwrap()
                .matmul(&sb.recompose_with(|l| l.powf(alpha)))
                .unwrap(),
        )
        .unwrap()
        .scale_re(0.5);

    let w_geo = numerical_radius(&geo, 1e-10 * geo.scale_floor()).unwrap();
    let w_h = numerical_radius(&heinz, 1e-10 * heinz.scale_floor()).unwrap();
    println!("\nR17 first-link witness (positive definite A ≠ B, α = 0.1):");
    println!(
        "  w(A^½XB^½) ∈ [{:.9}, {:.9}]",
        w_geo.value,
        w_geo.value + w_geo.certified_error
    );
    println!(
        "  w(H_α)     ∈ [{:.9}, {:.9}]",
        w_h.value,
        w_h.value + w_h.certified_error
    );
    println!(
        "  certified gap (lower-left minus upper-right): {:.6}",
        w_geo.value - (w_h.value + w_h.certified_error)
    );
    println!(
        "  independent oracle check: {:.9} vs {:.9}",
        radius_dense_oracle(&geo, 200_000).unwrap(),
        radius_dense_oracle(&heinz, 200_000).unwrap()
    );
    println!(
        "  first link gates the sweep: {}",
        is_gating("R17", "geometric-vs-heinz")
    );

    // through the checker machinery the same witness registers as an
    // informational failure while the chain's proven links stay green
    let mut ops = Operands::with_a(a);
    ops.b = Some(b);
    ops.x = Some(x);
    let params = CheckParams {
        r: Some(2.0),
        alpha: Some(0.1),
        ..CheckParams::default()
    };
    println!("\nfull chain through the registry:");
    for r in check("R17", &ops, &params, 1e-8).unwrap() {
        println!(
            "  {:<26} slack {:+.4e}  {}{}",
            r.display_id(),
            r.slack,
            if r.satisfied { "OK" } else { "VIOLATION" },
            if is_gating(&r.checker_id, &r.link) {
                ""
            } else {
                " (not gated)"
            }
        );
    }
}
