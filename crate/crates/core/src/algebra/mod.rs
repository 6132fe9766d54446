//! Finite-dimensional *-algebras and special Jordan algebras: closures,
//! centers, central projections and Wedderburn blocks.

mod center;
mod closure;
mod jordan;
mod quaternion;
mod star;
mod wedderburn;

pub use center::{center, minimal_central_projections};
pub use closure::{algebra_closure, SpannedSubalgebra, CLOSURE_TOL};
pub use jordan::{
    formal_reality_witness, jordan_closure, jordan_product, jordan_spectral_decompose, JordanBasis,
};
pub use quaternion::{quaternion_embed, Quaternion};
pub use star::{AlgebraElement, StarAlgebraSpec};
pub use wedderburn::{
    projection_rank, sort_projections, wedderburn_decompose, BlockUnits, WedderburnIso,
};

pub(crate) use closure::paired_closure;
