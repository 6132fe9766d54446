//! Recover the block structure of a *-algebra presented only by generators
//! hidden behind a random unitary.

use encdec::algebra::{algebra_closure, center, wedderburn_decompose};
use encdec::linalg::{random_hermitian, random_unitary, seeded_rng, CMatrix};

fn main() -> encdec::Result<()> {
    // M₂ ⊗ 𝟙₂ ⊕ M₁ inside M₅
    let mut rng = seeded_rng(1);
    let v = random_unitary(5, 2);
    let embed = |a: &CMatrix, c: f64| {
        let mut m = CMatrix::zeros(5, 5);
        m.set_block(0, 0, &a.kron(&CMatrix::identity(2)));
        m.set_block(4, 4, &CMatrix::diag_real(&[c]));
        v.matmul(&m).matmul(&v.adjoint())
    };
    let gens = vec![
        embed(&random_hermitian(2, &mut rng), 0.3),
        embed(&random_hermitian(2, &mut rng), -1.0),
    ];
    let alg = algebra_closure(&gens, true)?;
    let z = center(&alg)?;
    let (spec, iso) = wedderburn_decompose(&alg, 11)?;
    println!(
        "dimension {}, center {}, blocks {:?}",
        alg.dim(),
        z.dim(),
        spec.block_dims()
    );
    for (b, units) in iso.blocks().iter().enumerate() {
        let e = units.central_projection();
        println!(
            "  block {b}: trace of central projection {:.3}",
            e.trace().re
        );
    }
    let x = &gens[0];
    let back = iso.backward(&iso.forward(x)?)?;
    println!("round trip residual {:.1e}", back.distance(x));
    Ok(())
}
