//! The quaternions as a real *-subalgebra of M₂(ℂ).

use encdec::algebra::{algebra_closure, quaternion_embed, Quaternion};
use encdec::linalg::{seeded_rng, CMatrix};
use rand::Rng;

fn main() -> encdec::Result<()> {
    let (i, j, k) = (
        quaternion_embed(Quaternion::I),
        quaternion_embed(Quaternion::J),
        quaternion_embed(Quaternion::K),
    );
    println!("‖ij − k‖ = {:.1e}", i.matmul(&j).distance(&k));
    println!(
        "‖i² + 𝟙‖ = {:.1e}",
        (&i.matmul(&i) + &CMatrix::identity(2)).frobenius_norm()
    );

    let mut rng = seeded_rng(5);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let mut q = || Quaternion::new(rng.gen(), rng.gen(), rng.gen(), rng.gen());
        let (x, y) = (q(), q());
        worst = worst.max(
            quaternion_embed(x * y).distance(&quaternion_embed(x).matmul(&quaternion_embed(y))),
        );
    }
    println!("max multiplicativity residual over 100 pairs: {worst:.1e}");

    // over ℂ the image generates all of M₂
    let alg = algebra_closure(&[i, j], true)?;
    println!("complex span of the closure: {}", alg.dim());
    Ok(())
}
