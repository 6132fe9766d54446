//! Real-linear maps between finite-dimensional *-algebras and their
//! canonical linear/antilinear form.

pub mod basis;
mod canonical;
mod checks;
mod compare;
mod extend;
mod map;
mod sample;

pub use canonical::{
    assert_canonical_equivalence, build_from_canonical, canonical_decompose,
    split_linear_antilinear, CanonicalForm, LinearSplit,
};
pub use checks::{
    check_associative_hom, check_convexity, check_jordan_hom, check_jordan_map,
    check_spectrum_preserving, projection_orthogonality_residual, CheckItem, CheckReport,
};
pub use compare::{compare_encodings, Signature, Verdict};
pub use extend::{extend_jordan_hom, extend_jordan_hom_with, WordOrder};
pub use map::{JordanMap, RealLinearMap};
pub use sample::random_canonical_form;
