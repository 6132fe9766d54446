//! The even part of the n-mode fermion algebra splits into two blocks of
//! size 2ⁿ⁻¹, cut out by the parity projections (𝟙 ± P)/2.

use encdec::fermions::{even_decompose, jordan_wigner};

fn main() -> encdec::Result<()> {
    let seed = 7;
    for n in 1..=4 {
        let rep = jordan_wigner(n)?;
        let split = even_decompose(&rep, seed)?;
        println!(
            "n = {n}: dim {:>3}, blocks {:?}, ‖e − E±‖ = {:.2e}, first block is the {} sector",
            split.dimension,
            split.spec.block_dims(),
            split.projection_residual,
            if split.plus_first {
                "even-parity"
            } else {
                "odd-parity"
            }
        );
    }
    Ok(())
}
