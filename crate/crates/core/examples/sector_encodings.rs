//! Encodings of the even fermion algebra may treat its two parity sectors
//! differently: different copy counts, linear in one and antilinear in the
//! other, or with the target blocks exchanged.

use encdec::encoding::{canonical_decompose, check_associative_hom, compare_encodings};
use encdec::fermions::{sector_encoding_demo, SectorMultiplicities};

fn main() -> encdec::Result<()> {
    let asymmetric = SectorMultiplicities {
        p_plus: 2,
        q_plus: 0,
        p_minus: 0,
        q_minus: 1,
    };
    let map = sector_encoding_demo(2, asymmetric, false, 3)?;
    let form = canonical_decompose(&map)?;
    println!("target {:?}", map.target().block_dims());
    println!("p = {:?}\nq = {:?}", form.p, form.q);
    println!(
        "*-homomorphism: {}",
        check_associative_hom(&map, 10, 0, 1e-8).passed()
    );

    let plain = SectorMultiplicities {
        p_plus: 1,
        q_plus: 0,
        p_minus: 1,
        q_minus: 0,
    };
    let straight = sector_encoding_demo(2, plain, false, 4)?;
    let swapped = sector_encoding_demo(2, plain, true, 4)?;
    let verdict = compare_encodings(&straight, &swapped, 10, 0)?;
    println!(
        "straight vs swapped sectors equivalent: {}",
        verdict.is_equivalent()
    );
    Ok(())
}
