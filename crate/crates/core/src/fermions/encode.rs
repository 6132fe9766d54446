use crate::algebra::{algebra_closure, paired_closure, AlgebraElement, StarAlgebraSpec};
use crate::encoding::{build_from_canonical, check_associative_hom, CanonicalForm, RealLinearMap};
use crate::error::{Error, Result};
use crate::linalg::{random_unitary_with, seeded_rng, CMatrix};

use super::car::{ensure_modes, jordan_wigner, CarRep};

const HOM_TOL: f64 = 1e-8;

/// The encoding `M_{2ⁿ} → M_{2ⁿ}` fixed by `aₖ^{JW} ↦ aₖ^{rep}`.
///
/// The closure of the JW annihilators is grown with each element's image
/// riding along, which extends the assignment multiplicatively and linearly.
pub fn rep_as_encoding(rep: &CarRep) -> Result<RealLinearMap> {
    let dim = rep.dim();
    let generated = algebra_closure(rep.annihilators(), true)?.dim();
    if generated != dim * dim {
        return Err(Error::ClosureDeficient {
            expected: dim * dim,
            found: generated,
        });
    }
    let jw = jordan_wigner(rep.modes())?;
    let pairs: Vec<(CMatrix, CMatrix)> = jw
        .annihilators()
        .iter()
        .cloned()
        .zip(rep.annihilators().iter().cloned())
        .collect();
    let (basis, images) = paired_closure(&pairs, true)?;
    if basis.len() != dim * dim {
        return Err(Error::ClosureDeficient {
            expected: dim * dim,
            found: basis.len(),
        });
    }
    let spec = StarAlgebraSpec::full(dim);
    let map = RealLinearMap::from_fn(&spec, &spec, |x| {
        let x = x.block(0);
        let mut out = CMatrix::zeros(dim, dim);
        for (b, img) in basis.iter().zip(&images) {
            let c = b.inner(x);
            if c.norm() > 0.0 {
                out.axpy(c, img);
            }
        }
        AlgebraElement::from_blocks(vec![out])
    })?;
    let report = check_associative_hom(&map, 10, 0, HOM_TOL);
    if let Some(bad) = report.items.into_iter().find(|i| !i.pass) {
        return Err(Error::NotHomomorphism {
            axiom: bad.name,
            residual: bad.residual,
        });
    }
    Ok(map)
}

/// Multiplicities for the two parity sectors of the even algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SectorMultiplicities {
    pub p_plus: usize,
    pub q_plus: usize,
    pub p_minus: usize,
    pub q_minus: usize,
}

/// Encoding of `M_{2ⁿ⁻¹} ⊕ M_{2ⁿ⁻¹}` sending each sector to its own target
/// block with the given copy counts, conjugated by a random unitary. With
/// `swapped`, the `−` sector lands in target block 0.
pub fn sector_encoding_demo(
    modes: usize,
    mult: SectorMultiplicities,
    swapped: bool,
    seed: u64,
) -> Result<RealLinearMap> {
    ensure_modes(modes)?;
    let d = 1usize << (modes - 1);
    let source = StarAlgebraSpec::new(vec![d, d])?;
    let sizes = [
        (mult.p_plus + mult.q_plus) * d,
        (mult.p_minus + mult.q_minus) * d,
    ];
    let (t_plus, t_minus) = if swapped { (1, 0) } else { (0, 1) };
    let mut target_dims = [0; 2];
    target_dims[t_plus] = sizes[0];
    target_dims[t_minus] = sizes[1];
    if let Some(j) = target_dims.iter().position(|&m| m == 0) {
        return Err(Error::AccountingMismatch {
            target_block: j,
            expected: d,
            got: 0,
        });
    }
    let target = StarAlgebraSpec::new(target_dims.to_vec())?;
    let mut p = vec![vec![0; 2]; 2];
    let mut q = vec![vec![0; 2]; 2];
    p[0][t_plus] = mult.p_plus;
    q[0][t_plus] = mult.q_plus;
    p[1][t_minus] = mult.p_minus;
    q[1][t_minus] = mult.q_minus;
    let mut rng = seeded_rng(seed);
    let unitary = target_dims
        .iter()
        .map(|&m| random_unitary_with(m, &mut rng))
        .collect();
    build_from_canonical(&CanonicalForm { p, q, unitary }, &source, &target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encoding::{canonical_decompose, compare_encodings, Verdict};
    use crate::fermions::car::bravyi_kitaev;
    use crate::linalg::random_unitary;

    #[test]
    fn jw_is_identity() {
        let map = rep_as_encoding(&jordan_wigner(2).unwrap()).unwrap();
        let id = RealLinearMap::identity(map.source());
        for (a, b) in map.images().iter().zip(id.images()) {
            assert!(a.distance(b) < 1e-12);
        }
    }

    #[test]
    fn conjugated_rep_recovers_unitary() {
        let v = random_unitary(4, 3);
        let rep = jordan_wigner(2).unwrap().conjugated(&v, "moved").unwrap();
        let form = canonical_decompose(&rep_as_encoding(&rep).unwrap()).unwrap();
        assert_eq!((form.p, form.q), (vec![vec![1]], vec![vec![0]]));
        // U agrees with V up to a global phase
        let u = &form.unitary[0];
        let overlap = u.adjoint().matmul(&v).trace() / 4.0;
        assert!((overlap.norm() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn jw_and_bk_are_equivalent() {
        let jw = rep_as_encoding(&jordan_wigner(2).unwrap()).unwrap();
        let bk = rep_as_encoding(&bravyi_kitaev(2).unwrap()).unwrap();
        let v = compare_encodings(&jw, &bk, 10, 1).unwrap();
        match v {
            Verdict::Equivalent { residual, .. } => assert!(residual < 1e-8),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn deficient_generators() {
        let jw = jordan_wigner(2).unwrap();
        let rep = CarRep::new(
            "half",
            vec![jw.annihilator(0).clone(), CMatrix::zeros(4, 4)],
        )
        .unwrap();
        assert!(matches!(
            rep_as_encoding(&rep),
            Err(Error::ClosureDeficient { expected: 16, .. })
        ));
    }

    #[test]
    fn sector_demo_round_trip() {
        let mult = SectorMultiplicities {
            p_plus: 2,
            q_plus: 0,
            p_minus: 0,
            q_minus: 1,
        };
        let map = sector_encoding_demo(2, mult, false, 5).unwrap();
        assert_eq!(map.target().block_dims(), [4, 2]);
        let form = canonical_decompose(&map).unwrap();
        assert_eq!(form.p, vec![vec![2, 0], vec![0, 0]]);
        assert_eq!(form.q, vec![vec![0, 0], vec![0, 1]]);
    }

    #[test]
    fn swapped_sectors_are_inequivalent() {
        let mult = SectorMultiplicities {
            p_plus: 1,
            q_plus: 0,
            p_minus: 1,
            q_minus: 0,
        };
        let a = sector_encoding_demo(2, mult, false, 1).unwrap();
        let b = sector_encoding_demo(2, mult, true, 1).unwrap();
        assert!(!compare_encodings(&a, &b, 5, 0).unwrap().is_equivalent());
    }

    #[test]
    fn empty_sector_is_rejected() {
        let mult = SectorMultiplicities {
            p_plus: 1,
            q_plus: 0,
            p_minus: 0,
            q_minus: 0,
        };
        assert!(matches!(
            sector_encoding_demo(2, mult, false, 0),
            Err(Error::AccountingMismatch {
                target_block: 1,
                ..
            })
        ));
    }
}
