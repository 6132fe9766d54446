//! Jordan-Wigner and Bravyi-Kitaev as encodings of the same mode algebra:
//! same signature, related by an explicit unitary.

use encdec::encoding::{canonical_decompose, compare_encodings, Verdict};
use encdec::fermions::{bravyi_kitaev, jordan_wigner, rep_as_encoding};

fn main() -> encdec::Result<()> {
    for n in 2..=3 {
        let jw = rep_as_encoding(&jordan_wigner(n)?)?;
        let bk = rep_as_encoding(&bravyi_kitaev(n)?)?;
        let form = canonical_decompose(&bk)?;
        println!("n = {n}: bk has p = {:?}, q = {:?}", form.p, form.q);
        match compare_encodings(&jw, &bk, 20, 1)? {
            Verdict::Equivalent { witness, residual } => {
                let w = witness.block(0);
                let nonzero = w.data().iter().filter(|z| z.norm() > 1e-9).count();
                println!(
                    "  equivalent, residual {residual:.2e}, witness has {nonzero} nonzero entries"
                );
            }
            Verdict::Inequivalent { a, b } => println!("  inequivalent: {a:?} vs {b:?}"),
        }
    }
    Ok(())
}
