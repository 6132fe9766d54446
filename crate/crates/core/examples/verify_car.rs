//! Anticommutation residuals of the Jordan-Wigner and Bravyi-Kitaev
//! representations, and the basis change relating them.

use encdec::fermions::{bk_basis_change, bravyi_kitaev, jordan_wigner};

fn main() -> encdec::Result<()> {
    println!(
        "{:>5}  {:>12}  {:>12}  {:>12}",
        "modes", "jw", "bk", "bk vs Π·jw·Π†"
    );
    for n in 1..=6 {
        let jw = jordan_wigner(n)?;
        let bk = bravyi_kitaev(n)?;
        let pi = bk_basis_change(n)?;
        let gap = (0..n)
            .map(|k| {
                pi.matmul(jw.annihilator(k))
                    .matmul(&pi.adjoint())
                    .distance(bk.annihilator(k))
            })
            .fold(0.0, f64::max);
        println!(
            "{n:>5}  {:>12.3e}  {:>12.3e}  {:>12.3e}",
            jw.max_car_residual(),
            bk.max_car_residual(),
            gap
        );
    }
    Ok(())
}
