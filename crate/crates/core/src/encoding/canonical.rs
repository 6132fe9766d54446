//! Canonical form `Γ(α) = U (⊕ᵢ αᵢ^{⊕pᵢⱼ} ⊕ ᾱᵢ^{⊕qᵢⱼ}) U*` of a real
//! *-homomorphism between finite-dimensional *-algebras.

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, StarAlgebraSpec};
use crate::error::{Error, Result};
use crate::linalg::{c64, orthonormalize_columns, psd_null_space, seeded_rng, CMatrix, Complex64};

use super::checks::{check_associative_hom, CheckItem};
use super::map::RealLinearMap;

const HOM_TOL: f64 = 1e-8;
const HOM_SAMPLES: usize = 20;
const INTEGER_GUARD: f64 = 1e-6;
const NULL_TOL: f64 = 1e-9;
const UNITARY_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CanonicalForm {
    /// `p[i][j]`: copies of `αᵢ` in target block `j`.
    pub p: Vec<Vec<usize>>,
    /// `q[i][j]`: copies of `ᾱᵢ` in target block `j`.
    pub q: Vec<Vec<usize>>,
    /// One unitary per target block.
    pub unitary: Vec<CMatrix>,
}

impl CanonicalForm {
    /// Form with identity unitaries.
    pub fn with_identity(p: Vec<Vec<usize>>, q: Vec<Vec<usize>>, target: &StarAlgebraSpec) -> Self {
        let unitary = target
            .block_dims()
            .iter()
            .map(|&m| CMatrix::identity(m))
            .collect();
        CanonicalForm { p, q, unitary }
    }

    /// Shape, accounting `Σᵢ (pᵢⱼ + qᵢⱼ) nᵢ = mⱼ` and unitarity.
    pub fn validate(&self, source: &StarAlgebraSpec, target: &StarAlgebraSpec) -> Result<()> {
        let (ns, nt) = (source.num_blocks(), target.num_blocks());
        let shape_ok = |t: &Vec<Vec<usize>>| t.len() == ns && t.iter().all(|row| row.len() == nt);
        if !shape_ok(&self.p) || !shape_ok(&self.q) {
            return Err(Error::SpecMismatch(format!(
                "multiplicity tables must be {ns}×{nt}"
            )));
        }
        if self.unitary.len() != nt {
            return Err(Error::SpecMismatch(format!(
                "{} unitaries for {nt} target blocks",
                self.unitary.len()
            )));
        }
        for (j, &m) in target.block_dims().iter().enumerate() {
            let got: usize = (0..ns)
                .map(|i| (self.p[i][j] + self.q[i][j]) * source.block_dims()[i])
                .sum();
            if got != m {
                return Err(Error::AccountingMismatch {
                    target_block: j,
                    expected: m,
                    got,
                });
            }
            let u = &self.unitary[j];
            if u.shape() != (m, m) {
                return Err(Error::DimensionMismatch(format!(
                    "unitary {j} is {:?}, block is {m}×{m}",
                    u.shape()
                )));
            }
            let defect = u.unitarity_defect();
            if !(defect <= UNITARY_TOL * (m as f64).sqrt().max(1.0)) {
                return Err(Error::NotUnitary { defect });
            }
        }
        Ok(())
    }

    /// `U (⊕ copies) U*` for each target block; assumes a validated form.
    fn evaluate(&self, target: &StarAlgebraSpec, x: &AlgebraElement) -> AlgebraElement {
        let blocks = (0..target.num_blocks())
            .map(|j| {
                let mut parts: Vec<CMatrix> = Vec::new();
                for (i, xi) in x.blocks().iter().enumerate() {
                    parts.extend(std::iter::repeat_n(xi.clone(), self.p[i][j]));
                    let bar = xi.conj();
                    parts.extend(std::iter::repeat_n(bar, self.q[i][j]));
                }
                let u = &self.unitary[j];
                u.matmul(&CMatrix::direct_sum(&parts)).matmul(&u.adjoint())
            })
            .collect();
        AlgebraElement::from_blocks(blocks)
    }
}

/// `K = Γ(i𝟙)` and its spectral projectors `E± = (𝟙 ∓ iK)/2`.
#[derive(Clone, Debug)]
pub struct LinearSplit {
    pub k: AlgebraElement,
    pub plus: AlgebraElement,
    pub minus: AlgebraElement,
}

fn ensure_hom(map: &RealLinearMap) -> Result<()> {
    let report = check_associative_hom(map, HOM_SAMPLES, 0, HOM_TOL);
    match report.items.into_iter().find(|i| !i.pass) {
        Some(bad) => Err(Error::NotHomomorphism {
            axiom: bad.name,
            residual: bad.residual,
        }),
        None => Ok(()),
    }
}

fn too_big(r: f64, tol: f64) -> bool {
    !(r <= tol)
}

pub fn split_linear_antilinear(map: &RealLinearMap) -> Result<LinearSplit> {
    ensure_hom(map)?;
    let source = map.source();
    let target = map.target();
    let one = AlgebraElement::unit(target);
    let k = map.apply(&AlgebraElement::unit(source).i_times())?;

    let sq = k.mul(&k).add(&one).frobenius_norm();
    if too_big(sq, HOM_TOL) {
        return Err(Error::BadSquareRoot { residual: sq });
    }
    let skew = k.adjoint().add(&k).frobenius_norm();
    if too_big(skew, HOM_TOL) {
        return Err(Error::NotHomomorphism {
            axiom: "k_skew_adjoint".into(),
            residual: skew,
        });
    }
    let central = map
        .images()
        .iter()
        .map(|g| k.mul(g).sub(&g.mul(&k)).frobenius_norm())
        .fold(0.0, f64::max);
    if too_big(central, HOM_TOL) {
        return Err(Error::NotHomomorphism {
            axiom: "k_commutes".into(),
            residual: central,
        });
    }

    let ik = k.i_times();
    let plus = one.sub(&ik).scale_real(0.5);
    let minus = one.add(&ik).scale_real(0.5);

    let i = c64(0.0, 1.0);
    let mut rng = seeded_rng(0);
    let mut worst: f64 = 0.0;
    for _ in 0..HOM_SAMPLES {
        let x = AlgebraElement::random(source, &mut rng);
        let (gx, gix) = (map.apply(&x)?, map.apply(&x.i_times())?);
        worst = worst.max(plus.mul(&gix).distance(&plus.mul(&gx).scale(i)));
        worst = worst.max(minus.mul(&gix).distance(&minus.mul(&gx).scale(-i)));
    }
    if too_big(worst, HOM_TOL) {
        return Err(Error::NotHomomorphism {
            axiom: "linear_split".into(),
            residual: worst,
        });
    }
    Ok(LinearSplit { k, plus, minus })
}

fn round_multiplicity(value: f64, source_block: usize, target_block: usize) -> Result<usize> {
    let r = value.round();
    if !((value - r).abs() <= INTEGER_GUARD) || r < 0.0 {
        return Err(Error::MultiplicityNonInteger {
            source_block,
            target_block,
            value,
        });
    }
    Ok(r as usize)
}

/// Generators of `M_n` as a real algebra: `E₀₀`, `iE₀₀` and the
/// nearest-neighbour matrix units.
fn block_generators(n: usize) -> Vec<CMatrix> {
    let mut gens = vec![
        CMatrix::unit(n, 0, 0),
        CMatrix::unit(n, 0, 0).scale(c64(0.0, 1.0)),
    ];
    for r in 0..n.saturating_sub(1) {
        gens.push(CMatrix::unit(n, r, r + 1));
        gens.push(CMatrix::unit(n, r + 1, r));
    }
    gens
}

/// Isometries `V` (`m × n`, `V†V = 𝟙`) with `Γ(x)ⱼ V = V ρ(x)` where
/// `ρ(x) = xᵢ` or `x̄ᵢ`. Column-major `vec` turns the condition into
/// `(𝟙 ⊗ A − Bᵀ ⊗ 𝟙) vec V = 0`.
fn intertwiners(map: &RealLinearMap, i: usize, j: usize, antilinear: bool) -> Result<Vec<CMatrix>> {
    let n = map.source().block_dims()[i];
    let m = map.target().block_dims()[j];
    let (id_n, id_m) = (CMatrix::identity(n), CMatrix::identity(m));
    let mut gram = CMatrix::zeros(m * n, m * n);
    for x in block_generators(n) {
        let a = map
            .apply(&AlgebraElement::in_block(map.source(), i, x.clone()))?
            .block(j)
            .clone();
        let b = if antilinear { x.conj() } else { x };
        let l = &id_n.kron(&a) - &b.transpose().kron(&id_m);
        gram += &l.adjoint().matmul(&l);
    }
    let scale = (n as f64).sqrt();
    let null = psd_null_space(&gram, NULL_TOL)?;
    Ok(null
        .into_iter()
        .map(|v| {
            let mut iso = CMatrix::from_fn(m, n, |r, c| v[c * m + r] * scale);
            // gauge: largest-magnitude entry real positive
            let pivot = iso
                .data()
                .iter()
                .copied()
                .max_by(|a, b| a.norm().total_cmp(&b.norm()))
                .unwrap_or(Complex64::new(1.0, 0.0));
            if pivot.norm() > 0.0 {
                iso = iso.scale(pivot.conj() / pivot.norm());
            }
            iso
        })
        .collect())
}

/// Multiplicities and intertwining unitaries of a real *-homomorphism.
pub fn canonical_decompose(map: &RealLinearMap) -> Result<CanonicalForm> {
    let split = split_linear_antilinear(map)?;
    let source = map.source();
    let target = map.target();
    let (ns, nt) = (source.num_blocks(), target.num_blocks());
    let mut p = vec![vec![0; nt]; ns];
    let mut q = vec![vec![0; nt]; ns];
    for (i, &n) in source.block_dims().iter().enumerate() {
        let e00 = AlgebraElement::in_block(source, i, CMatrix::unit(n, 0, 0));
        let img = map.apply(&e00)?;
        for j in 0..nt {
            let g = img.block(j);
            p[i][j] = round_multiplicity(split.plus.block(j).matmul(g).trace().re, i, j)?;
            q[i][j] = round_multiplicity(split.minus.block(j).matmul(g).trace().re, i, j)?;
        }
    }
    for (j, &m) in target.block_dims().iter().enumerate() {
        let got: usize = (0..ns)
            .map(|i| (p[i][j] + q[i][j]) * source.block_dims()[i])
            .sum();
        if got != m {
            return Err(Error::AccountingMismatch {
                target_block: j,
                expected: m,
                got,
            });
        }
    }

    let mut unitary = Vec::with_capacity(nt);
    for (j, &m) in target.block_dims().iter().enumerate() {
        let mut columns: Vec<Vec<Complex64>> = Vec::with_capacity(m);
        for i in 0..ns {
            for (antilinear, expected) in [(false, p[i][j]), (true, q[i][j])] {
                if expected == 0 {
                    continue;
                }
                let isos = intertwiners(map, i, j, antilinear)?;
                if isos.len() != expected {
                    return Err(Error::IntertwinerRankMismatch {
                        source_block: i,
                        target_block: j,
                        expected,
                        found: isos.len(),
                    });
                }
                for v in &isos {
                    columns.extend((0..v.cols()).map(|c| v.column(c)));
                }
            }
        }
        let u = orthonormalize_columns(&CMatrix::from_columns(m, &columns)).ok_or_else(|| {
            Error::NotHomomorphism {
                axiom: "intertwiner_independence".into(),
                residual: f64::NAN,
            }
        })?;
        unitary.push(u);
    }

    let form = CanonicalForm { p, q, unitary };
    let check = assert_canonical_equivalence(map, &form, HOM_SAMPLES, HOM_TOL)?;
    if !check.pass {
        return Err(Error::NotHomomorphism {
            axiom: "reconstruction".into(),
            residual: check.residual,
        });
    }
    Ok(form)
}

/// The map `α ↦ U(⊕ᵢ αᵢ^{⊕pᵢⱼ} ⊕ ᾱᵢ^{⊕qᵢⱼ})U*`.
pub fn build_from_canonical(
    form: &CanonicalForm,
    source: &StarAlgebraSpec,
    target: &StarAlgebraSpec,
) -> Result<RealLinearMap> {
    form.validate(source, target)?;
    RealLinearMap::from_fn(source, target, |x| form.evaluate(target, x))
}

/// Max over random samples of `‖map(x) − form(x)‖_F`.
pub fn assert_canonical_equivalence(
    map: &RealLinearMap,
    form: &CanonicalForm,
    samples: usize,
    tol: f64,
) -> Result<CheckItem> {
    form.validate(map.source(), map.target())?;
    let mut rng = seeded_rng(0x5eed);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let x = AlgebraElement::random(map.source(), &mut rng);
        let r = map.apply(&x)?.distance(&form.evaluate(map.target(), &x));
        worst = super::checks::nan_max(worst, r);
    }
    Ok(CheckItem::new("canonical_equivalence", worst, tol))
}
