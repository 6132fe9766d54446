//! Hermitian eigendecomposition by cyclic complex Jacobi rotations.

use num_complex::Complex64;

use super::matrix::{CMatrix, HERMITIAN_TOL};
use crate::error::Result;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order with the unitary whose columns are the
/// matching eigenvectors.
#[derive(Clone, Debug)]
pub struct HermEig {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

impl HermEig {
    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        self.vectors.column(k)
    }

    /// Orthogonal projector onto the span of the eigenvectors `range`.
    pub fn projector(&self, range: std::ops::Range<usize>) -> CMatrix {
        let n = self.vectors.rows();
        let mut p = CMatrix::zeros(n, n);
        for k in range {
            let v = self.vector(k);
            for i in 0..n {
                if v[i] == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    p[(i, j)] += v[i] * v[j].conj();
                }
            }
        }
        p
    }
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Rotations are applied in cyclic row order until the off-diagonal mass is
/// at rounding level. Each rotation first removes the phase of the pivot
/// entry, then applies the real symmetric Jacobi rotation.
pub fn herm_eig(m: &CMatrix) -> Result<HermEig> {
    m.ensure_square()?;
    m.ensure_hermitian(HERMITIAN_TOL)?;
    Ok(jacobi(m.hermitian_part()))
}

fn jacobi(mut a: CMatrix) -> HermEig {
    let n = a.rows();
    let mut v = CMatrix::identity(n);
    let scale = a.frobenius_norm();
    if scale == 0.0 || n == 1 {
        return finish(a, v);
    }
    let skip = 1e-300_f64.max(1e-18 * scale);
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += a[(p, q)].norm_sqr();
            }
        }
        if off.sqrt() <= 1e-15 * scale {
            break;
        }
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag <= skip {
                    continue;
                }
                rotated = true;
                let phase_conj = (apq / mag).conj();
                let theta = (a[(q, q)].re - a[(p, p)].re) / (2.0 * mag);
                let t = if theta == 0.0 {
                    1.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // plane rotation G on (p, q)
                let g_pp = Complex64::new(c, 0.0);
                let g_pq = Complex64::new(s, 0.0);
                let g_qp = phase_conj * (-s);
                let g_qq = phase_conj * c;
                rotate_columns(&mut a, p, q, g_pp, g_pq, g_qp, g_qq);
                rotate_rows(&mut a, p, q, g_pp, g_pq, g_qp, g_qq);
                rotate_columns(&mut v, p, q, g_pp, g_pq, g_qp, g_qq);
                a[(p, q)] = Complex64::new(0.0, 0.0);
                a[(q, p)] = Complex64::new(0.0, 0.0);
                a[(p, p)].im = 0.0;
                a[(q, q)].im = 0.0;
            }
        }
        if !rotated {
            break;
        }
    }
    finish(a, v)
}

/// `M ← M·G` restricted to columns p, q.
fn rotate_columns(
    m: &mut CMatrix,
    p: usize,
    q: usize,
    g_pp: Complex64,
    g_pq: Complex64,
    g_qp: Complex64,
    g_qq: Complex64,
) {
    for k in 0..m.rows() {
        let mp = m[(k, p)];
        let mq = m[(k, q)];
        m[(k, p)] = mp * g_pp + mq * g_qp;
        m[(k, q)] = mp * g_pq + mq * g_qq;
    }
}

/// `M ← G†·M` restricted to rows p, q.
fn rotate_rows(
    m: &mut CMatrix,
    p: usize,
    q: usize,
    g_pp: Complex64,
    g_pq: Complex64,
    g_qp: Complex64,
    g_qq: Complex64,
) {
    for k in 0..m.cols() {
        let mp = m[(p, k)];
        let mq = m[(q, k)];
        m[(p, k)] = g_pp.conj() * mp + g_qp.conj() * mq;
        m[(q, k)] = g_pq.conj() * mp + g_qq.conj() * mq;
    }
}

fn finish(a: CMatrix, v: CMatrix) -> HermEig {
    let n = a.rows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = CMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    HermEig { values, vectors }
}

/// Orthonormal basis of the null space of a Hermitian positive semidefinite
/// matrix: eigenvectors whose eigenvalue is at most `tol · max(1, λ_max)`.
pub fn psd_null_space(g: &CMatrix, tol: f64) -> Result<Vec<Vec<Complex64>>> {
    let eig = herm_eig(g)?;
    let top = eig.values.last().copied().unwrap_or(0.0).max(1.0);
    Ok(eig
        .values
        .iter()
        .enumerate()
        .filter(|(_, &l)| l <= tol * top)
        .map(|(k, _)| eig.vector(k))
        .collect())
}
