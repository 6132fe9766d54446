use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraElement;
use crate::error::Result;
use crate::linalg::seeded_rng;

use super::canonical::canonical_decompose;
use super::checks::nan_max;
use super::map::RealLinearMap;

/// Multiplicity tables `(p, q)` of a decomposed map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub p: Vec<Vec<usize>>,
    pub q: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    /// `b(x) = W a(x) W*` with `W` block-diagonal in the target.
    Equivalent {
        witness: AlgebraElement,
        residual: f64,
    },
    Inequivalent {
        a: Signature,
        b: Signature,
    },
}

impl Verdict {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Verdict::Equivalent { .. })
    }
}

/// Decomposes both maps and, when the signatures agree, returns
/// `W = U_b U_a*` with the max residual over `samples` random elements.
pub fn compare_encodings(
    a: &RealLinearMap,
    b: &RealLinearMap,
    samples: usize,
    seed: u64,
) -> Result<Verdict> {
    a.source().ensure_same(b.source())?;
    a.target().ensure_same(b.target())?;
    let fa = canonical_decompose(a)?;
    let fb = canonical_decompose(b)?;
    if fa.p != fb.p || fa.q != fb.q {
        return Ok(Verdict::Inequivalent {
            a: Signature { p: fa.p, q: fa.q },
            b: Signature { p: fb.p, q: fb.q },
        });
    }
    let witness = AlgebraElement::from_blocks(
        fb.unitary
            .iter()
            .zip(&fa.unitary)
            .map(|(ub, ua)| ub.matmul(&ua.adjoint()))
            .collect(),
    );
    let w_adj = witness.adjoint();
    let mut rng = seeded_rng(seed);
    let mut residual: f64 = 0.0;
    for _ in 0..samples {
        let x = AlgebraElement::random(a.source(), &mut rng);
        let moved = witness.mul(&a.apply(&x)?).mul(&w_adj);
        residual = nan_max(residual, b.apply(&x)?.distance(&moved));
    }
    Ok(Verdict::Equivalent { witness, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::StarAlgebraSpec;
    use crate::linalg::random_unitary;

    #[test]
    fn map_against_itself() {
        let spec = StarAlgebraSpec::full(3);
        let id = RealLinearMap::identity(&spec);
        match compare_encodings(&id, &id, 5, 1).unwrap() {
            Verdict::Equivalent { witness, residual } => {
                assert!(residual < 1e-10);
                assert!(witness.distance(&AlgebraElement::unit(&spec)) < 1e-10);
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn conjugated_copy_is_equivalent() {
        let spec = StarAlgebraSpec::full(3);
        let v = random_unitary(3, 9);
        let id = RealLinearMap::identity(&spec);
        let moved = RealLinearMap::from_fn(&spec, &spec, |x| {
            AlgebraElement::from_blocks(vec![v.matmul(x.block(0)).matmul(&v.adjoint())])
        })
        .unwrap();
        let verdict = compare_encodings(&id, &moved, 10, 2).unwrap();
        match verdict {
            Verdict::Equivalent { residual, .. } => assert!(residual < 1e-8),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn identity_vs_conjugation() {
        let spec = StarAlgebraSpec::full(2);
        let v = compare_encodings(
            &RealLinearMap::identity(&spec),
            &RealLinearMap::conjugation(&spec),
            5,
            0,
        )
        .unwrap();
        match v {
            Verdict::Inequivalent { a, b } => {
                assert_eq!((a.p, a.q), (vec![vec![1]], vec![vec![0]]));
                assert_eq!((b.p, b.q), (vec![vec![0]], vec![vec![1]]));
            }
            v => panic!("{v:?}"),
        }
    }
}
