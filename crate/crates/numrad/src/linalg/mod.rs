//! Dense complex-matrix arithmetic and spectral primitives on which the
//! rest of the crate builds.

pub mod classify;
pub mod eig;
pub mod matrix;
pub mod spectral;
pub mod svd;

pub use classify::{classify, StructureFlags};
pub use eig::{hermitian_eig, lambda_max_bracket, lambda_min_bracket, HermitianSpectrum, TridiagWorkspace};
pub use matrix::{ComplexMatrix, Vector};
pub use spectral::{
    absolute_value, abs_spectrum, apply_scalar_function_psd, hermitian_inverse, matrix_power_psd,
    psd_spectrum,
};
pub use svd::{operator_norm, sigma_min, svd, SvdFactors};
