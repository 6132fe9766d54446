use rand::Rng;

use crate::algebra::StarAlgebraSpec;
use crate::error::{Error, Result};
use crate::linalg::random_unitary_with;

use super::canonical::CanonicalForm;

const MAX_COPIES: usize = 3;
const MAX_TARGET_BLOCKS: usize = 3;
const ATTEMPTS: usize = 1000;

/// Random injective canonical form out of `source` with total target matrix
/// size at most `max_size`, and the target spec it implies. Unitaries are
/// Haar-like (Gram-Schmidt of complex Gaussians).
pub fn random_canonical_form<R: Rng + ?Sized>(
    source: &StarAlgebraSpec,
    max_size: usize,
    rng: &mut R,
) -> Result<(StarAlgebraSpec, CanonicalForm)> {
    let ns = source.num_blocks();
    let dims = source.block_dims();
    if source.matrix_size() > max_size {
        return Err(Error::InvalidArgument(format!(
            "source of size {} cannot embed into size {max_size}",
            source.matrix_size()
        )));
    }
    for _ in 0..ATTEMPTS {
        let blocks = rng.gen_range(1..=MAX_TARGET_BLOCKS);
        let mut p = vec![vec![0; blocks]; ns];
        let mut q = vec![vec![0; blocks]; ns];
        for j in 0..blocks {
            for i in 0..ns {
                p[i][j] = rng.gen_range(0..=MAX_COPIES);
                q[i][j] = rng.gen_range(0..=MAX_COPIES);
                // keep most entries sparse so that several blocks fit
                if rng.gen_bool(0.5) {
                    p[i][j] = 0;
                }
                if rng.gen_bool(0.5) {
                    q[i][j] = 0;
                }
            }
        }
        let sizes: Vec<usize> = (0..blocks)
            .map(|j| (0..ns).map(|i| (p[i][j] + q[i][j]) * dims[i]).sum())
            .collect();
        let injective = (0..ns).all(|i| (0..blocks).any(|j| p[i][j] + q[i][j] > 0));
        if !injective || sizes.contains(&0) || sizes.iter().sum::<usize>() > max_size {
            continue;
        }
        let target = StarAlgebraSpec::new(sizes.clone())?;
        let unitary = sizes.iter().map(|&m| random_unitary_with(m, rng)).collect();
        return Ok((target, CanonicalForm { p, q, unitary }));
    }
    Err(Error::InvalidArgument(format!(
        "no canonical form found within size {max_size}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::seeded_rng;

    #[test]
    fn forms_validate_and_respect_budget() {
        let mut rng = seeded_rng(1);
        for n in 1..=3 {
            let source = StarAlgebraSpec::full(n);
            for _ in 0..20 {
                let (target, form) = random_canonical_form(&source, 24, &mut rng).unwrap();
                assert!(target.matrix_size() <= 24);
                form.validate(&source, &target).unwrap();
            }
        }
    }

    #[test]
    fn deterministic_for_a_seed() {
        let source = StarAlgebraSpec::new(vec![2, 2]).unwrap();
        let a = random_canonical_form(&source, 24, &mut seeded_rng(4)).unwrap();
        let b = random_canonical_form(&source, 24, &mut seeded_rng(4)).unwrap();
        assert_eq!(a.1, b.1);
    }
}
