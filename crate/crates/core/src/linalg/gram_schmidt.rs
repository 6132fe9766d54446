//! Re-orthogonalised modified Gram-Schmidt over matrices (Hilbert-Schmidt
//! inner product) and over column vectors.

use num_complex::Complex64;

use super::matrix::CMatrix;

/// Residual norm, relative to `max(‖candidate‖, 1)`, below which a
/// candidate is considered dependent. The floor of 1 treats rounding-level
/// candidates (products that vanish in exact arithmetic) as zero.
pub const DROP_TOL: f64 = 1e-10;

/// Scalars used for the span.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    /// Real span; the inner product is `Re tr(x† y)`.
    Real,
    /// Complex span; the inner product is `tr(x† y)`.
    Complex,
}

/// Orthonormal basis grown one candidate at a time.
///
/// An optional shadow matrix can ride along with each candidate. The shadow
/// receives exactly the same linear operations as the candidate, so after
/// orthonormalisation each shadow is the image of its basis element under
/// any linear map that sent the original candidates to the original shadows.
#[derive(Clone, Debug)]
pub struct OrthoBasis {
    field: Field,
    drop_tol: f64,
    basis: Vec<CMatrix>,
    shadows: Vec<CMatrix>,
}

impl OrthoBasis {
    pub fn new(field: Field) -> Self {
        OrthoBasis {
            field,
            drop_tol: DROP_TOL,
            basis: Vec::new(),
            shadows: Vec::new(),
        }
    }

    pub fn with_drop_tol(mut self, tol: f64) -> Self {
        self.drop_tol = tol;
        self
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[CMatrix] {
        &self.basis
    }

    pub fn shadows(&self) -> &[CMatrix] {
        &self.shadows
    }

    pub fn into_basis(self) -> Vec<CMatrix> {
        self.basis
    }

    pub fn into_parts(self) -> (Vec<CMatrix>, Vec<CMatrix>) {
        (self.basis, self.shadows)
    }

    fn coefficient(&self, b: &CMatrix, x: &CMatrix) -> Complex64 {
        let c = b.inner(x);
        match self.field {
            Field::Real => Complex64::new(c.re, 0.0),
            Field::Complex => c,
        }
    }

    /// Coordinates of `x` in the basis.
    pub fn coefficients(&self, x: &CMatrix) -> Vec<Complex64> {
        self.basis.iter().map(|b| self.coefficient(b, x)).collect()
    }

    /// `x` minus its orthogonal projection onto the span.
    pub fn residual(&self, x: &CMatrix) -> CMatrix {
        let mut r = x.clone();
        for _ in 0..2 {
            for b in &self.basis {
                let c = self.coefficient(b, &r);
                r.axpy(-c, b);
            }
        }
        r
    }

    pub fn contains(&self, x: &CMatrix, tol: f64) -> bool {
        self.residual(x).frobenius_norm() <= tol * x.frobenius_norm().max(1.0)
    }

    /// Adds `candidate` if it is independent of the current span. Returns
    /// whether the basis grew.
    pub fn insert(&mut self, candidate: &CMatrix) -> bool {
        self.insert_impl(candidate, None)
    }

    pub fn insert_with_shadow(&mut self, candidate: &CMatrix, shadow: &CMatrix) -> bool {
        self.insert_impl(candidate, Some(shadow))
    }

    fn insert_impl(&mut self, candidate: &CMatrix, shadow: Option<&CMatrix>) -> bool {
        let norm = candidate.frobenius_norm();
        if norm == 0.0 || !norm.is_finite() {
            return false;
        }
        let mut r = candidate.clone();
        let mut s = shadow.cloned();
        for _ in 0..2 {
            for (k, b) in self.basis.iter().enumerate() {
                let c = self.coefficient(b, &r);
                r.axpy(-c, b);
                if let Some(s) = s.as_mut() {
                    s.axpy(-c, &self.shadows[k]);
                }
            }
        }
        let rn = r.frobenius_norm();
        if rn <= self.drop_tol * norm.max(1.0) {
            return false;
        }
        self.basis.push(r.scale_real(1.0 / rn));
        if let Some(s) = s {
            self.shadows.push(s.scale_real(1.0 / rn));
        }
        true
    }
}

/// Orthonormalises the columns of `m` left to right. Returns `None` if the
/// columns are numerically dependent.
pub fn orthonormalize_columns(m: &CMatrix) -> Option<CMatrix> {
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(m.cols());
    for j in 0..m.cols() {
        let mut v = m.column(j);
        let norm0 = vec_norm(&v);
        for _ in 0..2 {
            for q in &cols {
                let c = vec_inner(q, &v);
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi -= c * qi;
                }
            }
        }
        let n = vec_norm(&v);
        if n <= DROP_TOL * norm0 || n == 0.0 {
            return None;
        }
        v.iter_mut().for_each(|z| *z /= n);
        cols.push(v);
    }
    Some(CMatrix::from_columns(m.rows(), &cols))
}

pub fn vec_inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub fn vec_norm(a: &[Complex64]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}
