//! Seeded random test data. All generators take caller-held RNG state.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::gram_schmidt::orthonormalize_columns;
use super::matrix::CMatrix;

pub type SeededRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard complex normal: real and imaginary parts each N(0, 1/2).
pub fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn gaussian_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| complex_normal(rng))
}

/// Random Hermitian matrix with unit Frobenius norm.
pub fn random_hermitian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix {
    let h = gaussian_matrix(n, n, rng).hermitian_part();
    let norm = h.frobenius_norm();
    if norm == 0.0 {
        return CMatrix::identity(n).scale_real(1.0 / (n as f64).sqrt());
    }
    h.scale_real(1.0 / norm)
}

/// Haar-distributed unitary from an existing RNG stream.
pub fn random_unitary_with<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> CMatrix {
    loop {
        let g = gaussian_matrix(dim, dim, rng);
        // Gram-Schmidt on the columns is QR with a positive diagonal in R,
        // which is the phase fix that makes Q Haar distributed.
        if let Some(q) = orthonormalize_columns(&g) {
            return q;
        }
    }
}

/// Haar-distributed unitary, deterministic in `seed`.
pub fn random_unitary(dim: usize, seed: u64) -> CMatrix {
    random_unitary_with(dim, &mut seeded_rng(seed))
}
