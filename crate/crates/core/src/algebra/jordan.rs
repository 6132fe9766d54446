//! Special Jordan algebras of Hermitian matrices.

use crate::error::{Error, Result};
use crate::linalg::{
    cluster_sorted, herm_eig, CMatrix, Field, OrthoBasis, DEFAULT_CLUSTER_TOL, HERMITIAN_TOL,
};

use super::closure::CLOSURE_TOL;

/// `a ∘ b = (ab + ba)/2`
pub fn jordan_product(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    a.ensure_square()?;
    a.ensure_same_shape(b)?;
    Ok(a.anticommutator(b).scale_real(0.5))
}

/// Real span of Hermitian matrices, orthonormal under `Re tr(x y)` and closed
/// under the Jordan product.
#[derive(Clone, Debug)]
pub struct JordanBasis {
    ambient_dim: usize,
    basis: Vec<CMatrix>,
}

impl JordanBasis {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[CMatrix] {
        &self.basis
    }

    /// Real dimension.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn project(&self, x: &CMatrix) -> CMatrix {
        let mut p = CMatrix::zeros(self.ambient_dim, self.ambient_dim);
        for b in &self.basis {
            p.axpy(crate::linalg::c64(b.inner(x).re, 0.0), b);
        }
        p
    }

    /// Largest residual of a pairwise Jordan product after projection.
    pub fn closure_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, a) in self.basis.iter().enumerate() {
            for b in &self.basis[i..] {
                let p = a.anticommutator(b).scale_real(0.5);
                worst = worst.max(self.project(&p).distance(&p));
            }
        }
        worst
    }

    pub fn is_closed(&self) -> bool {
        self.closure_residual() <= CLOSURE_TOL
    }
}

/// Smallest real span containing `generators` (and `𝟙` if requested) that
/// is closed under the Jordan product.
///
/// Unlike the associative case, products with generators alone do not
/// suffice, so each new element is multiplied against the whole current
/// basis.
pub fn jordan_closure(generators: &[CMatrix], include_unit: bool) -> Result<JordanBasis> {
    let first = generators
        .first()
        .ok_or_else(|| Error::InvalidArgument("closure needs at least one generator".into()))?;
    let n = first.rows();
    for g in generators {
        first.ensure_same_shape(g)?;
        g.ensure_hermitian(HERMITIAN_TOL)?;
    }
    let mut span = OrthoBasis::new(Field::Real);
    if include_unit {
        span.insert(&CMatrix::identity(n));
    }
    for g in generators {
        span.insert(&g.hermitian_part());
    }
    let mut frontier_start = 0;
    while frontier_start < span.len() {
        let frontier_end = span.len();
        for k in frontier_start..frontier_end {
            let x = span.basis()[k].clone();
            let mut j = 0;
            while j < span.len() {
                let y = &span.basis()[j];
                let prod = x.anticommutator(y).scale_real(0.5).hermitian_part();
                span.insert(&prod);
                j += 1;
            }
        }
        frontier_start = frontier_end;
    }
    Ok(JordanBasis {
        ambient_dim: n,
        basis: span.into_basis(),
    })
}

/// `a = Σ λᵢ pᵢ` with pairwise orthogonal projections `pᵢ` summing to `𝟙`,
/// one per distinct (clustered) eigenvalue, in ascending order.
pub fn jordan_spectral_decompose(a: &CMatrix) -> Result<Vec<(f64, CMatrix)>> {
    let eig = herm_eig(a)?;
    Ok(cluster_sorted(&eig.values, DEFAULT_CLUSTER_TOL)
        .into_iter()
        .map(|c| (c.mean, eig.projector(c.start..c.end)))
        .collect())
}

/// For Hermitian `aᵢ`: returns `(tr Σ aᵢ², Σ ‖aᵢ‖_F²)`. The two agree, so
/// `Σ aᵢ² = 0` forces every `aᵢ = 0`.
pub fn formal_reality_witness(elements: &[CMatrix]) -> Result<(f64, f64)> {
    let mut trace = 0.0;
    let mut norms = 0.0;
    for a in elements {
        a.ensure_hermitian(HERMITIAN_TOL)?;
        trace += a.matmul(a).trace().re;
        norms += a.frobenius_norm().powi(2);
    }
    Ok((trace, norms))
}
