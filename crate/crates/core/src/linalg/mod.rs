//! Dense complex matrices and the spectral primitives built on them.

mod eig;
mod gram_schmidt;
mod matrix;
mod random;
mod spectrum;

pub use eig::{herm_eig, psd_null_space, HermEig};
pub use gram_schmidt::{orthonormalize_columns, vec_inner, vec_norm, Field, OrthoBasis, DROP_TOL};
pub use matrix::{CMatrix, HERMITIAN_TOL};
pub use random::{
    complex_normal, gaussian_matrix, random_hermitian, random_unitary, random_unitary_with,
    seeded_rng, SeededRng,
};
pub use spectrum::{spectrum, SpectrumSet, DEFAULT_CLUSTER_TOL};

pub(crate) use spectrum::cluster_sorted;

pub use num_complex::Complex64;

#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
