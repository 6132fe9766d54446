//! Centers and minimal central projections.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::linalg::{cluster_sorted, herm_eig, psd_null_space, seeded_rng, CMatrix, Complex64};

use super::closure::{SpannedSubalgebra, CLOSURE_TOL};

const NULL_TOL: f64 = 1e-12;
const MAX_REFINE_ROUNDS: usize = 16;

/// Structure constants `S[k][l][m] = ⟨bₘ, bₖ bₗ⟩` together with the closure
/// residual of the basis.
struct StructureConstants {
    table: Vec<Vec<Vec<Complex64>>>,
    closure_residual: f64,
}

fn structure_constants(alg: &SpannedSubalgebra) -> StructureConstants {
    let basis = alg.basis();
    let d = basis.len();
    let mut table = vec![vec![Vec::new(); d]; d];
    let mut worst: f64 = 0.0;
    for k in 0..d {
        for l in 0..d {
            let prod = basis[k].matmul(&basis[l]);
            let coords = alg.coordinates(&prod);
            let mut r = prod;
            for (c, b) in coords.iter().zip(basis) {
                r.axpy(-c, b);
            }
            worst = worst.max(r.frobenius_norm());
            table[k][l] = coords;
        }
    }
    StructureConstants {
        table,
        closure_residual: worst,
    }
}

/// `{x ∈ alg : xb = bx for every basis element b}`.
///
/// The commutators are expressed in basis coordinates; the center is the
/// null space of the stacked system `Σₗ ‖[x, bₗ]‖²`.
pub fn center(alg: &SpannedSubalgebra) -> Result<SpannedSubalgebra> {
    let d = alg.dim();
    if d == 0 {
        return Ok(alg.clone());
    }
    let sc = structure_constants(alg);
    if sc.closure_residual > CLOSURE_TOL {
        return Err(Error::NotClosed {
            residual: sc.closure_residual,
        });
    }
    // gram[k][k'] = Σ_l Σ_m conj(C_kl^m) C_k'l^m, C_kl = S_kl − S_lk
    let mut gram = CMatrix::zeros(d, d);
    let mut comm = vec![Complex64::new(0.0, 0.0); d * d];
    for l in 0..d {
        for k in 0..d {
            for m in 0..d {
                comm[k * d + m] = sc.table[k][l][m] - sc.table[l][k][m];
            }
        }
        for k in 0..d {
            for kp in k..d {
                let mut acc = Complex64::new(0.0, 0.0);
                for m in 0..d {
                    acc += comm[k * d + m].conj() * comm[kp * d + m];
                }
                gram[(k, kp)] += acc;
                if kp != k {
                    gram[(kp, k)] += acc.conj();
                }
            }
        }
    }
    let null = psd_null_space(&gram, NULL_TOL)?;
    let n = alg.ambient_dim();
    let basis = null
        .iter()
        .map(|coeffs| {
            let mut z = CMatrix::zeros(n, n);
            for (c, b) in coeffs.iter().zip(alg.basis()) {
                z.axpy(*c, b);
            }
            z
        })
        .collect();
    Ok(SpannedSubalgebra::from_parts(n, basis, alg.contains_unit()))
}

/// Minimal central projections of a unital semisimple subalgebra, in a
/// deterministic order (see [`projection_order`]).
///
/// The spectral projections of a random Hermitian central element are
/// central. Any projection that still carries more than one central
/// direction is split again with a fresh random central element until the
/// count matches the center dimension.
pub fn minimal_central_projections(alg: &SpannedSubalgebra, seed: u64) -> Result<Vec<CMatrix>> {
    if !alg.contains_unit() {
        return Err(Error::InvalidArgument(
            "minimal central projections need a unital algebra".into(),
        ));
    }
    let z = center(alg)?;
    minimal_projections_of_center(&z, seed)
}

pub(crate) fn minimal_projections_of_center(
    z: &SpannedSubalgebra,
    seed: u64,
) -> Result<Vec<CMatrix>> {
    let n = z.ambient_dim();
    let target = z.dim();
    let mut rng = seeded_rng(seed);
    let mut projections = vec![CMatrix::identity(n)];
    for _ in 0..MAX_REFINE_ROUNDS {
        if projections.len() == target {
            break;
        }
        let h = z.random_hermitian(&mut rng);
        let mut refined = Vec::with_capacity(target);
        for e in &projections {
            refined.extend(split_projection(e, &h)?);
        }
        projections = refined;
    }
    if projections.len() != target {
        return Err(Error::CenterDegenerate {
            rounds: MAX_REFINE_ROUNDS,
        });
    }
    projections.sort_by(projection_order);
    Ok(projections)
}

/// Orthonormal basis (as columns) of the range of a projection.
pub(crate) fn range_basis(e: &CMatrix) -> Result<CMatrix> {
    let eig = herm_eig(&e.hermitian_part())?;
    let cols: Vec<_> = (0..eig.values.len())
        .filter(|&k| eig.values[k] > 0.5)
        .map(|k| eig.vector(k))
        .collect();
    Ok(CMatrix::from_columns(e.rows(), &cols))
}

/// Spectral projections of `e h e` inside the range of `e`, ascending by
/// eigenvalue. Eigenvalues closer than a relative `1e-6` gap are merged.
pub(crate) fn split_projection(e: &CMatrix, h: &CMatrix) -> Result<Vec<CMatrix>> {
    let w = range_basis(e)?;
    if w.cols() == 0 {
        return Ok(vec![]);
    }
    let restricted = w.adjoint().matmul(h).matmul(&w).hermitian_part();
    let eig = herm_eig(&restricted)?;
    let spread = eig
        .values
        .iter()
        .map(|v| v.abs())
        .fold(0.0, f64::max)
        .max(1e-300);
    let wv = w.matmul(&eig.vectors);
    Ok(cluster_sorted(&eig.values, 1e-6 * spread)
        .into_iter()
        .map(|c| {
            let block = wv.block(0, c.start, wv.rows(), c.end - c.start);
            block.matmul(&block.adjoint())
        })
        .collect())
}

/// Orders projections by the first diagonal index carrying weight, then by
/// the full diagonal, then by trace.
pub(crate) fn projection_order(a: &CMatrix, b: &CMatrix) -> Ordering {
    let first = |m: &CMatrix| {
        (0..m.rows())
            .find(|&i| m[(i, i)].re > 1e-6)
            .unwrap_or(m.rows())
    };
    first(a)
        .cmp(&first(b))
        .then_with(|| {
            for i in 0..a.rows() {
                let o = b[(i, i)].re.total_cmp(&a[(i, i)].re);
                if (a[(i, i)].re - b[(i, i)].re).abs() > 1e-9 && o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
        .then_with(|| a.trace().re.total_cmp(&b.trace().re))
}
