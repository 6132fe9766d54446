//! Build an encoding from random multiplicities and a random unitary,
//! check the axioms, then recover the multiplicities from the map alone.

use encdec::algebra::StarAlgebraSpec;
use encdec::encoding::{
    assert_canonical_equivalence, build_from_canonical, canonical_decompose, check_associative_hom,
    check_jordan_hom, check_spectrum_preserving, random_canonical_form,
};
use encdec::linalg::seeded_rng;

fn main() -> encdec::Result<()> {
    let mut rng = seeded_rng(2024);
    let source = StarAlgebraSpec::new(vec![2, 3])?;
    for case in 0..5 {
        let (target, form) = random_canonical_form(&source, 24, &mut rng)?;
        let map = build_from_canonical(&form, &source, &target)?;
        let checks = [
            check_spectrum_preserving(&map, 10, case, 1e-8),
            check_jordan_hom(&map, 10, case, 1e-8),
            check_associative_hom(&map, 10, case, 1e-8),
        ];
        let back = canonical_decompose(&map)?;
        let recon = assert_canonical_equivalence(&map, &back, 10, 1e-8)?;
        println!("case {case}: target {:?}", target.block_dims());
        println!("  p = {:?}  q = {:?}", form.p, form.q);
        println!(
            "  axioms {}  recovered {}  reconstruction {:.2e}",
            if checks.iter().all(|c| c.passed()) {
                "ok"
            } else {
                "FAILED"
            },
            back.p == form.p && back.q == form.q,
            recon.residual
        );
    }
    Ok(())
}
