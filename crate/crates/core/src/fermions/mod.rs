//! Fermionic mode algebras: Jordan-Wigner and Bravyi-Kitaev
//! representations, parity, and the even subalgebra.

mod car;
mod encode;
mod parity;

pub use car::{
    bk_basis_change, bk_sets, bravyi_kitaev, jordan_wigner, sigma_minus, CarRep, CarResidual,
    MAX_MODES,
};
pub use encode::{rep_as_encoding, sector_encoding_demo, SectorMultiplicities};
pub use parity::{
    even_decompose, even_generators, even_subalgebra, parity_operator, EvenSplit, ParityData,
};
