use serde::{Deserialize, Serialize};

use crate::algebra::{
    algebra_closure, wedderburn_decompose, SpannedSubalgebra, StarAlgebraSpec, WedderburnIso,
};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;

use super::car::CarRep;

const SIGN_TOL: f64 = 1e-10;
const PROJECTION_TOL: f64 = 1e-8;

/// `P` and `E± = (𝟙 ± P)/2`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParityData {
    pub parity: CMatrix,
    pub e_plus: CMatrix,
    pub e_minus: CMatrix,
}

/// `P = Πₖ (𝟙 − 2aₖ*aₖ)`, checked to satisfy `P aₖ P = −aₖ`.
pub fn parity_operator(rep: &CarRep) -> Result<ParityData> {
    let id = CMatrix::identity(rep.dim());
    let mut p = id.clone();
    for k in 0..rep.modes() {
        let factor = &id - &rep.number(k).scale_real(2.0);
        p = p.matmul(&factor);
    }
    for (k, a) in rep.annihilators().iter().enumerate() {
        let r = (&p.matmul(a).matmul(&p) + a).frobenius_norm();
        if !(r <= SIGN_TOL) {
            return Err(Error::BadCar(format!("P a_{k} P + a_{k} has norm {r:.3e}")));
        }
    }
    let e_plus = (&id + &p).scale_real(0.5);
    let e_minus = (&id - &p).scale_real(0.5);
    Ok(ParityData {
        parity: p,
        e_plus,
        e_minus,
    })
}

/// Degree-two monomials `a_j a_k`, `a_j* a_k`, `a_j* a_k*`.
pub fn even_generators(rep: &CarRep) -> Vec<CMatrix> {
    let n = rep.modes();
    let mut gens = Vec::new();
    for j in 0..n {
        for k in 0..n {
            let (aj, ak) = (rep.annihilator(j), rep.annihilator(k));
            gens.push(rep.creator(j).matmul(ak));
            if j < k {
                gens.push(aj.matmul(ak));
                gens.push(rep.creator(j).matmul(&rep.creator(k)));
            }
        }
    }
    gens
}

/// Unital closure of the degree-two monomials; every basis element is
/// checked to commute with `P`.
pub fn even_subalgebra(rep: &CarRep) -> Result<SpannedSubalgebra> {
    let parity = parity_operator(rep)?;
    let alg = algebra_closure(&even_generators(rep), true)?;
    for b in alg.basis() {
        let r = b.commutator(&parity.parity).frobenius_norm();
        if !(r <= SIGN_TOL) {
            return Err(Error::BadCar(format!(
                "even element fails to commute with P ({r:.3e})"
            )));
        }
    }
    Ok(alg)
}

/// Wedderburn split of the even algebra together with the comparison of its
/// central projections against `E±`.
#[derive(Clone, Debug)]
pub struct EvenSplit {
    pub dimension: usize,
    pub spec: StarAlgebraSpec,
    pub iso: WedderburnIso,
    /// Max Frobenius distance between recovered central projections and
    /// `{E₊, E₋}` under the better of the two matchings.
    pub projection_residual: f64,
    /// Whether the first recovered block is the `E₊` sector.
    pub plus_first: bool,
}

pub fn even_decompose(rep: &CarRep, seed: u64) -> Result<EvenSplit> {
    let parity = parity_operator(rep)?;
    let alg = even_subalgebra(rep)?;
    let (spec, iso) = wedderburn_decompose(&alg, seed)?;
    let half = rep.dim() / 2;
    if spec.block_dims() != [half, half] {
        return Err(Error::SpecMismatch(format!(
            "even algebra splits as {:?}, expected [{half}, {half}]",
            spec.block_dims()
        )));
    }
    let c = iso.central_projections();
    let straight = c[0]
        .distance(&parity.e_plus)
        .max(c[1].distance(&parity.e_minus));
    let swapped = c[0]
        .distance(&parity.e_minus)
        .max(c[1].distance(&parity.e_plus));
    let (projection_residual, plus_first) = if straight <= swapped {
        (straight, true)
    } else {
        (swapped, false)
    };
    if !(projection_residual <= PROJECTION_TOL) {
        return Err(Error::SpecMismatch(format!(
            "central projections differ from (𝟙 ± P)/2 by {projection_residual:.3e}"
        )));
    }
    Ok(EvenSplit {
        dimension: alg.dim(),
        spec,
        iso,
        projection_residual,
        plus_first,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fermions::car::{bravyi_kitaev, jordan_wigner};

    fn z_string(n: usize) -> CMatrix {
        let z = CMatrix::diag_real(&[1.0, -1.0]);
        (1..n).fold(z.clone(), |acc, _| acc.kron(&z))
    }

    #[test]
    fn jw_parity_is_z_string() {
        for n in 1..=4 {
            let p = parity_operator(&jordan_wigner(n).unwrap()).unwrap();
            assert!(p.parity.distance(&z_string(n)) < 1e-14);
            assert!(
                p.parity
                    .matmul(&p.parity)
                    .distance(&CMatrix::identity(1 << n))
                    < 1e-14
            );
            assert!(p.e_plus.matmul(&p.e_minus).frobenius_norm() < 1e-14);
        }
    }

    #[test]
    fn even_dimensions() {
        assert_eq!(
            even_subalgebra(&jordan_wigner(1).unwrap()).unwrap().dim(),
            2
        );
        for n in 2..=3 {
            assert_eq!(
                even_subalgebra(&jordan_wigner(n).unwrap()).unwrap().dim(),
                1 << (2 * n - 1)
            );
            assert_eq!(
                even_subalgebra(&bravyi_kitaev(n).unwrap()).unwrap().dim(),
                1 << (2 * n - 1)
            );
        }
    }

    #[test]
    fn hopping_term_is_even() {
        let rep = jordan_wigner(2).unwrap();
        let alg = even_subalgebra(&rep).unwrap();
        let hop =
            &rep.creator(0).matmul(rep.annihilator(1)) + &rep.creator(1).matmul(rep.annihilator(0));
        assert!(alg.membership_residual(&hop) < 1e-12);
        // a single annihilator is odd
        assert!(alg.membership_residual(rep.annihilator(0)) > 0.5);
    }

    #[test]
    fn even_split_blocks() {
        for n in 1..=3 {
            let split = even_decompose(&jordan_wigner(n).unwrap(), 7).unwrap();
            let half = 1 << (n - 1);
            assert_eq!(split.spec.block_dims(), [half, half]);
            assert!(split.projection_residual < 1e-8);
        }
    }

    #[test]
    fn odd_part_is_not_a_subalgebra() {
        // products of two odd operators are even, so the odd span is not closed
        let rep = jordan_wigner(2).unwrap();
        let a0 = rep.annihilator(0);
        let prod = rep.creator(0).matmul(a0);
        let parity = parity_operator(&rep).unwrap().parity;
        assert!(prod.commutator(&parity).frobenius_norm() < 1e-14);
        assert!(prod.frobenius_norm() > 0.5);
    }
}
