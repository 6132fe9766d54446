//! Subalgebras of `M_N(ℂ)` given by a Hilbert-Schmidt orthonormal basis, and
//! their construction from generators.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, Complex64, Field, OrthoBasis};

/// Products must land back in the span to within this residual.
pub const CLOSURE_TOL: f64 = 1e-8;
const ORTHONORMAL_TOL: f64 = 1e-10;

/// A †-closed subalgebra of `M_N(ℂ)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "SubalgebraRepr", into = "SubalgebraRepr")]
pub struct SpannedSubalgebra {
    ambient_dim: usize,
    basis: Vec<CMatrix>,
    contains_unit: bool,
}

#[derive(Serialize, Deserialize)]
struct SubalgebraRepr {
    ambient_dim: usize,
    basis: Vec<CMatrix>,
}

impl TryFrom<SubalgebraRepr> for SpannedSubalgebra {
    type Error = Error;

    fn try_from(r: SubalgebraRepr) -> Result<Self> {
        SpannedSubalgebra::from_orthonormal(r.ambient_dim, r.basis)
    }
}

impl From<SpannedSubalgebra> for SubalgebraRepr {
    fn from(s: SpannedSubalgebra) -> Self {
        SubalgebraRepr {
            ambient_dim: s.ambient_dim,
            basis: s.basis,
        }
    }
}

impl SpannedSubalgebra {
    /// Wraps an orthonormal basis, checking shapes and orthonormality.
    /// Closure under multiplication is not checked here; see
    /// [`SpannedSubalgebra::closure_residual`].
    pub fn from_orthonormal(ambient_dim: usize, basis: Vec<CMatrix>) -> Result<Self> {
        for b in &basis {
            if b.shape() != (ambient_dim, ambient_dim) {
                return Err(Error::DimensionMismatch(format!(
                    "basis element {}x{} in ambient dimension {ambient_dim}",
                    b.rows(),
                    b.cols()
                )));
            }
        }
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate().skip(i) {
                let expected = if i == j { 1.0 } else { 0.0 };
                let dev = (a.inner(b) - Complex64::new(expected, 0.0)).norm();
                if dev > ORTHONORMAL_TOL {
                    return Err(Error::InvalidArgument(format!(
                        "basis is not orthonormal: ⟨b{i}, b{j}⟩ off by {dev:.3e}"
                    )));
                }
            }
        }
        let mut span = OrthoBasis::new(Field::Complex);
        for b in &basis {
            span.insert(b);
        }
        let contains_unit = ambient_dim > 0 && span.contains(&CMatrix::identity(ambient_dim), 1e-9);
        Ok(SpannedSubalgebra {
            ambient_dim,
            basis,
            contains_unit,
        })
    }

    pub(crate) fn from_parts(ambient_dim: usize, basis: Vec<CMatrix>, contains_unit: bool) -> Self {
        SpannedSubalgebra {
            ambient_dim,
            basis,
            contains_unit,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[CMatrix] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains_unit(&self) -> bool {
        self.contains_unit
    }

    /// Coordinates `⟨bₖ, x⟩`.
    pub fn coordinates(&self, x: &CMatrix) -> Vec<Complex64> {
        self.basis.iter().map(|b| b.inner(x)).collect()
    }

    /// Orthogonal projection of `x` onto the span.
    pub fn project(&self, x: &CMatrix) -> CMatrix {
        let mut p = CMatrix::zeros(self.ambient_dim, self.ambient_dim);
        for b in &self.basis {
            p.axpy(b.inner(x), b);
        }
        p
    }

    /// `‖x − proj(x)‖_F`
    pub fn membership_residual(&self, x: &CMatrix) -> f64 {
        self.project(x).distance(x)
    }

    /// Largest residual of a pairwise basis product after projecting onto
    /// the span.
    pub fn closure_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for a in &self.basis {
            for b in &self.basis {
                worst = worst.max(self.membership_residual(&a.matmul(b)));
            }
        }
        worst
    }

    pub fn ensure_closed(&self) -> Result<()> {
        let residual = self.closure_residual();
        if residual > CLOSURE_TOL {
            return Err(Error::NotClosed { residual });
        }
        Ok(())
    }

    /// Random Hermitian element of the span, as a real combination of the
    /// Hermitian and anti-Hermitian parts of the basis. Requires †-closure.
    pub fn random_hermitian<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> CMatrix {
        let mut h = CMatrix::zeros(self.ambient_dim, self.ambient_dim);
        for b in &self.basis {
            let s: f64 = rng.sample(rand_distr::StandardNormal);
            let t: f64 = rng.sample(rand_distr::StandardNormal);
            h.axpy(Complex64::new(s, 0.0), &b.hermitian_part());
            h.axpy(Complex64::new(t, 0.0), &b.antihermitian_part());
        }
        h.hermitian_part()
    }
}

/// Smallest †-closed subalgebra containing `generators` (and `𝟙` when
/// `include_unit`).
///
/// Every new basis element is multiplied on the right by every generator and
/// every generator adjoint; the loop ends after a round adds nothing. The
/// dimension is bounded by `N²`, so this terminates.
pub fn algebra_closure(generators: &[CMatrix], include_unit: bool) -> Result<SpannedSubalgebra> {
    let n = ambient_of(generators)?;
    let pairs: Vec<(CMatrix, CMatrix)> =
        generators.iter().map(|g| (g.clone(), g.clone())).collect();
    let (basis, _) = closure_impl(n, &pairs, include_unit, false);
    let contains_unit = include_unit
        || SpannedSubalgebra::from_parts(n, basis.clone(), false)
            .membership_residual(&CMatrix::identity(n))
            <= 1e-9;
    Ok(SpannedSubalgebra::from_parts(n, basis, contains_unit))
}

/// Closure of generator pairs `(g, g')`, tracking the images of every basis
/// element under the assignment `g ↦ g'` extended multiplicatively. Returns
/// the orthonormal basis and the image of each basis element.
pub(crate) fn paired_closure(
    generators: &[(CMatrix, CMatrix)],
    include_unit: bool,
) -> Result<(Vec<CMatrix>, Vec<CMatrix>)> {
    let firsts: Vec<CMatrix> = generators.iter().map(|(g, _)| g.clone()).collect();
    let n = ambient_of(&firsts)?;
    Ok(closure_impl(n, generators, include_unit, true))
}

fn ambient_of(generators: &[CMatrix]) -> Result<usize> {
    let first = generators
        .first()
        .ok_or_else(|| Error::InvalidArgument("closure needs at least one generator".into()))?;
    first.ensure_square()?;
    for g in generators {
        first.ensure_same_shape(g)?;
    }
    Ok(first.rows())
}

fn closure_impl(
    n: usize,
    generators: &[(CMatrix, CMatrix)],
    include_unit: bool,
    track: bool,
) -> (Vec<CMatrix>, Vec<CMatrix>) {
    let mut gens: Vec<(CMatrix, CMatrix)> = Vec::with_capacity(2 * generators.len());
    for (g, s) in generators {
        gens.push((g.clone(), s.clone()));
        gens.push((g.adjoint(), s.adjoint()));
    }
    let mut span = OrthoBasis::new(Field::Complex);
    let insert = |span: &mut OrthoBasis, x: &CMatrix, s: &CMatrix| {
        if track {
            span.insert_with_shadow(x, s)
        } else {
            span.insert(x)
        }
    };
    if include_unit {
        let id = CMatrix::identity(n);
        insert(&mut span, &id, &id);
    }
    for (g, s) in &gens {
        insert(&mut span, g, s);
    }
    let mut frontier_start = 0;
    loop {
        let frontier_end = span.len();
        if frontier_start == frontier_end {
            break;
        }
        for k in frontier_start..frontier_end {
            let x = span.basis()[k].clone();
            let xs = if track {
                span.shadows()[k].clone()
            } else {
                x.clone()
            };
            for (g, s) in &gens {
                let cand = x.matmul(g);
                let cand_s = if track { xs.matmul(s) } else { cand.clone() };
                insert(&mut span, &cand, &cand_s);
            }
        }
        frontier_start = frontier_end;
    }
    span.into_parts()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> CMatrix {
        CMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]])
    }

    fn z() -> CMatrix {
        CMatrix::diag_real(&[1.0, -1.0])
    }

    #[test]
    fn unit_alone_is_one_dimensional() {
        let alg = algebra_closure(&[CMatrix::identity(3)], false).unwrap();
        assert_eq!(alg.dim(), 1);
        assert!(alg.contains_unit());
    }

    #[test]
    fn x_and_z_generate_m2() {
        let alg = algebra_closure(&[x(), z()], false).unwrap();
        assert_eq!(alg.dim(), 4);
        assert!(alg.contains_unit());
        assert!(alg.closure_residual() < 1e-12);
    }

    /// Independent oracle: enumerate all words of length ≤ 3 in {X, Z} and
    /// take the rank of their span.
    #[test]
    fn word_enumeration_agrees() {
        let gens = [x(), z()];
        let mut words = vec![];
        for a in &gens {
            words.push(a.clone());
            for b in &gens {
                words.push(a.matmul(b));
                for c in &gens {
                    words.push(a.matmul(b).matmul(c));
                }
            }
        }
        let mut span = OrthoBasis::new(Field::Complex);
        for w in &words {
            span.insert(w);
        }
        assert_eq!(span.len(), algebra_closure(&gens, false).unwrap().dim());
    }

    #[test]
    fn closure_is_idempotent() {
        let alg = algebra_closure(&[CMatrix::diag_real(&[1.0, 2.0, 2.0])], true).unwrap();
        assert_eq!(alg.dim(), 2);
        let again = algebra_closure(alg.basis(), false).unwrap();
        assert_eq!(again.dim(), alg.dim());
    }

    #[test]
    fn non_unital_closure() {
        let e11 = CMatrix::diag_real(&[1.0, 0.0]);
        let alg = algebra_closure(&[e11], false).unwrap();
        assert_eq!(alg.dim(), 1);
        assert!(!alg.contains_unit());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let alg = algebra_closure(&[z()], true).unwrap();
        let text = serde_json::to_string(&alg).unwrap();
        assert!(text.starts_with(r#"{"ambient_dim":2,"basis":["#));
        let back: SpannedSubalgebra = serde_json::from_str(&text).unwrap();
        assert_eq!(back.dim(), 2);
        assert!(back.contains_unit());
        // non-orthonormal basis rejected
        let bad = r#"{"ambient_dim":1,"basis":[{"rows":1,"cols":1,"data":[[2.0,0.0]]}]}"#;
        assert!(serde_json::from_str::<SpannedSubalgebra>(bad).is_err());
    }

    #[test]
    fn not_closed_span_detected() {
        // span{X} alone is not closed: X² = 𝟙
        let s = SpannedSubalgebra::from_orthonormal(2, vec![x().scale_real(1.0 / 2f64.sqrt())])
            .unwrap();
        assert!(matches!(s.ensure_closed(), Err(Error::NotClosed { .. })));
    }
}
