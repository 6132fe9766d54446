//! Transposition is a Jordan automorphism of the Hermitian matrices. Its
//! unique associative extension is entrywise conjugation, not transposition.

use encdec::algebra::{AlgebraElement, StarAlgebraSpec};
use encdec::encoding::{
    canonical_decompose, check_associative_hom, extend_jordan_hom_with, JordanMap, RealLinearMap,
    WordOrder,
};

fn main() -> encdec::Result<()> {
    for n in [2, 3] {
        let spec = StarAlgebraSpec::full(n);
        let gamma = JordanMap::from_fn(&spec, &spec, AlgebraElement::transpose)?;
        let forward = extend_jordan_hom_with(&gamma, WordOrder::Forward)?;
        let reversed = extend_jordan_hom_with(&gamma, WordOrder::Reversed)?;
        let conj = RealLinearMap::conjugation(&spec);
        let gap = |a: &RealLinearMap, b: &RealLinearMap| {
            a.images()
                .iter()
                .zip(b.images())
                .map(|(x, y)| x.distance(y))
                .fold(0.0, f64::max)
        };
        let form = canonical_decompose(&forward)?;
        println!(
            "n = {n}: ‖Γ − conj‖ = {:.1e}, word orders differ by {:.1e}, p = {:?}, q = {:?}",
            gap(&forward, &conj),
            gap(&forward, &reversed),
            form.p,
            form.q
        );
    }
    // transposition itself reverses products
    let t = RealLinearMap::transpose(&StarAlgebraSpec::full(2));
    let r = check_associative_hom(&t, 10, 0, 1e-8);
    println!(
        "transpose multiplicativity residual {:.3}",
        r.item("multiplicativity").unwrap().residual
    );
    Ok(())
}
