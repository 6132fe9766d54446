mod common;

use encdec::encoding::{canonical_decompose, compare_encodings};
use encdec::fermions::{
    bk_basis_change, bravyi_kitaev, even_decompose, jordan_wigner, parity_operator,
    rep_as_encoding, sector_encoding_demo, CarRep, SectorMultiplicities,
};
use encdec::linalg::{c64, CMatrix};
use encdec::Error;

use common::{car_defect, parity};

/// `Z^{⊗k} ⊗ σ⁻ ⊗ 𝟙`, built from the Kronecker product definition.
fn jw_reference(n: usize, k: usize) -> CMatrix {
    let z = CMatrix::diag_real(&[1.0, -1.0]);
    let sm = CMatrix::from_rows(&[
        &[c64(0.0, 0.0), c64(1.0, 0.0)],
        &[c64(0.0, 0.0), c64(0.0, 0.0)],
    ]);
    (0..n).fold(CMatrix::identity(1), |acc, q| {
        let f = if q < k {
            z.clone()
        } else if q == k {
            sm.clone()
        } else {
            CMatrix::identity(2)
        };
        acc.kron(&f)
    })
}

/// BK basis state for occupation vector `x`: qubit `k` holds the parity of
/// modes `k & (k + 1) ..= k`.
fn bk_code(x: usize, n: usize) -> usize {
    let bit = |i: usize| (x >> (n - 1 - i)) & 1;
    (0..n).fold(0, |acc, k| {
        let b = ((k & (k + 1))..=k).map(bit).sum::<usize>() % 2;
        acc | (b << (n - 1 - k))
    })
}

#[test]
fn jordan_wigner_matches_kronecker_definition() {
    for n in 1..=5 {
        let rep = jordan_wigner(n).unwrap();
        for k in 0..n {
            assert_eq!(rep.annihilator(k), &jw_reference(n, k));
        }
    }
}

#[test]
fn bravyi_kitaev_is_jordan_wigner_in_the_fenwick_basis() {
    for n in 1..=6 {
        let dim = 1 << n;
        let mut pi = CMatrix::zeros(dim, dim);
        for x in 0..dim {
            pi[(bk_code(x, n), x)] = c64(1.0, 0.0);
        }
        assert_eq!(bk_basis_change(n).unwrap(), pi, "n = {n}");
        let bk = bravyi_kitaev(n).unwrap();
        for k in 0..n {
            let expect = pi.matmul(&jw_reference(n, k)).matmul(&pi.adjoint());
            assert!(
                bk.annihilator(k).distance(&expect) < 1e-14,
                "n = {n}, mode {k}"
            );
        }
    }
}

#[test]
fn car_holds_up_to_the_mode_limit() {
    for n in 1..=6 {
        assert!(car_defect(jordan_wigner(n).unwrap().annihilators()) < 1e-12);
        assert!(car_defect(bravyi_kitaev(n).unwrap().annihilators()) < 1e-12);
    }
    assert!(matches!(jordan_wigner(11), Err(Error::TooManyModes { .. })));
    assert!(matches!(bravyi_kitaev(0), Err(Error::InvalidArgument(_))));
}

#[test]
fn broken_representation_is_rejected() {
    let mut ops = jordan_wigner(2).unwrap().annihilators().to_vec();
    ops[1] = ops[1].scale_real(1.1);
    let rep = CarRep::new("scaled", ops).unwrap();
    assert!(matches!(rep.ensure_car(1e-12), Err(Error::BadCar { .. })));
}

#[test]
fn parity_matches_product_formula() {
    for n in 1..=4 {
        let rep = bravyi_kitaev(n).unwrap();
        let data = parity_operator(&rep).unwrap();
        assert!(data.parity.distance(&parity(rep.annihilators())) < 1e-14);
        assert!(data.e_plus.matmul(&data.e_minus).frobenius_norm() < 1e-14);
        let jw = parity_operator(&jordan_wigner(n).unwrap()).unwrap();
        let zn = (0..n).fold(CMatrix::identity(1), |a, _| {
            a.kron(&CMatrix::diag_real(&[1.0, -1.0]))
        });
        assert_eq!(jw.parity, zn);
    }
}

#[test]
fn even_split_of_one_mode() {
    let split = even_decompose(&jordan_wigner(1).unwrap(), 0).unwrap();
    assert_eq!(split.dimension, 2);
    assert_eq!(split.spec.block_dims(), [1, 1]);
}

#[test]
fn rotated_representation_is_equivalent() {
    let jw = jordan_wigner(2).unwrap();
    let v = encdec::linalg::random_unitary(4, 9);
    let rotated = jw.conjugated(&v, "rotated").unwrap();
    let a = rep_as_encoding(&jw).unwrap();
    let b = rep_as_encoding(&rotated).unwrap();
    let form = canonical_decompose(&b).unwrap();
    assert_eq!((form.p, form.q), (vec![vec![1]], vec![vec![0]]));
    assert!(compare_encodings(&a, &b, 10, 0).unwrap().is_equivalent());
}

#[test]
fn sector_demo_recovers_its_multiplicities() {
    let mult = SectorMultiplicities {
        p_plus: 1,
        q_plus: 1,
        p_minus: 0,
        q_minus: 2,
    };
    let map = sector_encoding_demo(2, mult, false, 1).unwrap();
    let form = canonical_decompose(&map).unwrap();
    let total = |row: &Vec<usize>| row.iter().sum::<usize>();
    assert_eq!((total(&form.p[0]), total(&form.q[0])), (1, 1));
    assert_eq!((total(&form.p[1]), total(&form.q[1])), (0, 2));
    let empty = SectorMultiplicities {
        p_plus: 0,
        q_plus: 0,
        p_minus: 1,
        q_minus: 0,
    };
    assert!(sector_encoding_demo(2, empty, false, 1).is_err());
}
