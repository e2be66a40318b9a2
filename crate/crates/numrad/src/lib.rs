//! numrad — a numerical-range laboratory for dense complex matrices.
//!
//! The crate computes certified numerical radii and related operator
//! transforms, and verifies a registry of operator inequalities on seeded
//! random operands, reporting per-instance slack and certified violations.
//!
//! The pieces:
//!
//! * [`linalg`] — complex matrices, Hermitian eigendecomposition (cyclic
//!   Jacobi), SVD, operator norm, and spectral calculus on positive
//!   semidefinite matrices.
//! * [`numrange`] — the certified numerical-radius solver built on the
//!   supporting-line representation w(A) = sup_θ ‖Re(e^{iθ}A)‖, a dense-grid
//!   oracle, Rayleigh sampling, and boundary points of the numerical range.
//! * [`transforms`] — polar decomposition, Aluthge transforms, Heinz means,
//!   multiplicative function pairs, and paranormality probing.
//! * [`inequalities`] — the checker registry R01–R26 with hypothesis gates
//!   and slack reporting.
//! * [`harness`] — seeded operator generators, the fuzz sweep, and CSV/JSON
//!   report serialization.
//! * [`cli`] — the `numrad` binary's subcommands (radius, range, check,
//!   fuzz, summarize).
//!
//! Start with the crate examples (`cargo run --example radius_certificate`)
//! for a tour of each capability.

// index-based loops over matrix entries are the house style of the kernels
#![allow(clippy::needless_range_loop)]
#![allow(clippy::too_many_arguments)]

pub mod cli;
pub mod error;
pub mod harness;
pub mod inequalities;
pub mod linalg;
pub mod numrange;
pub mod transforms;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, Vector};
pub use numrange::{numerical_radius, RadiusEstimate};
