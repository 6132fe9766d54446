//! Encodings between finite-dimensional operator algebras: spectrum
//! preserving maps on observables, their extension to *-homomorphisms, and
//! the canonical form `U(⊕ α^{⊕p} ⊕ ᾱ^{⊕q})U*`. Fermionic mode algebras
//! (Jordan-Wigner, Bravyi-Kitaev) are provided as the worked example.

// Residual tests are written `!(r <= tol)` so that NaN fails.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod cli;
pub mod encoding;
pub mod error;
pub mod fermions;
pub mod linalg;

pub use error::{Error, Result};
