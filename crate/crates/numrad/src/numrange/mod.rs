//! Certified numerical-radius computation and numerical-range boundary
//! sampling.

pub mod boundary;
pub mod oracle;
pub mod radius;

pub use boundary::{numerical_range_boundary, BoundaryPoint};
pub use oracle::{radius_dense_oracle, radius_lower_bound_sampling, rayleigh};
pub use radius::{numerical_radius, RadiusEstimate};
