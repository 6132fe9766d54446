//! Wedderburn decomposition of a unital †-closed subalgebra of `M_N(ℂ)`
//! into full matrix blocks, realised by explicit systems of matrix units.

use crate::error::{Error, Result};
use crate::linalg::{seeded_rng, CMatrix, Complex64, Field, OrthoBasis};

use super::center::{
    center, minimal_projections_of_center, projection_order, range_basis, split_projection,
};
use super::closure::SpannedSubalgebra;
use super::star::{AlgebraElement, StarAlgebraSpec};

const ISO_TOL: f64 = 1e-8;
const MAX_ATTEMPTS: usize = 16;

/// Matrix units for one simple block: `u_j = e_{j1}` for `j = 1..n`, so that
/// `e_{jk} = u_j u_k†` and `u_j† u_k = δ_{jk} e_{11}`.
#[derive(Clone, Debug)]
pub struct BlockUnits {
    central: CMatrix,
    columns: Vec<CMatrix>,
    minimal_trace: f64,
}

impl BlockUnits {
    pub fn size(&self) -> usize {
        self.columns.len()
    }

    /// The minimal central projection of this block.
    pub fn central_projection(&self) -> &CMatrix {
        &self.central
    }

    /// Matrix unit `e_{jk}`.
    pub fn unit(&self, j: usize, k: usize) -> CMatrix {
        self.columns[j].matmul(&self.columns[k].adjoint())
    }
}

/// Unital *-isomorphism between a subalgebra and `⊕ M_{nᵢ}`.
#[derive(Clone, Debug)]
pub struct WedderburnIso {
    spec: StarAlgebraSpec,
    ambient_dim: usize,
    blocks: Vec<BlockUnits>,
}

impl WedderburnIso {
    pub fn spec(&self) -> &StarAlgebraSpec {
        &self.spec
    }

    pub fn blocks(&self) -> &[BlockUnits] {
        &self.blocks
    }

    pub fn central_projections(&self) -> Vec<CMatrix> {
        self.blocks.iter().map(|b| b.central.clone()).collect()
    }

    /// Coordinates of `x` in each block: `αᵢ[j,k] = tr(u_j† x u_k) / tr(e₁₁)`.
    pub fn forward(&self, x: &CMatrix) -> Result<AlgebraElement> {
        if x.shape() != (self.ambient_dim, self.ambient_dim) {
            return Err(Error::DimensionMismatch(format!(
                "expected {n}x{n}, got {}x{}",
                x.rows(),
                x.cols(),
                n = self.ambient_dim
            )));
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let n = b.size();
                let xu: Vec<CMatrix> = b.columns.iter().map(|u| x.matmul(u)).collect();
                CMatrix::from_fn(n, n, |j, k| b.columns[j].inner(&xu[k]) / b.minimal_trace)
            })
            .collect();
        Ok(AlgebraElement::from_blocks(blocks))
    }

    /// `Σᵢ Σ_{jk} αᵢ[j,k] e^{(i)}_{jk}`
    pub fn backward(&self, alpha: &AlgebraElement) -> Result<CMatrix> {
        alpha.ensure_spec(&self.spec)?;
        let mut out = CMatrix::zeros(self.ambient_dim, self.ambient_dim);
        for (b, a) in self.blocks.iter().zip(alpha.blocks()) {
            let n = b.size();
            for j in 0..n {
                for k in 0..n {
                    let c = a[(j, k)];
                    if c != Complex64::new(0.0, 0.0) {
                        out.axpy(c, &b.unit(j, k));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Splits `alg` into simple blocks.
///
/// For each minimal central projection `e`, a random Hermitian element of
/// `e·alg` is diagonalised inside the range of `e`; its spectral projections
/// are minimal projections `f₁..fₙ`. The first one seeds the matrix units:
/// `u_j` is the normalised largest `f_j b f₁` over the basis `b`.
pub fn wedderburn_decompose(
    alg: &SpannedSubalgebra,
    seed: u64,
) -> Result<(StarAlgebraSpec, WedderburnIso)> {
    if !alg.contains_unit() {
        return Err(Error::InvalidArgument(
            "Wedderburn decomposition needs a unital algebra".into(),
        ));
    }
    let z = center(alg)?;
    let centrals = minimal_projections_of_center(&z, seed)?;
    let mut rng = seeded_rng(seed.wrapping_add(0x9e37_79b9_7f4a_7c15));
    let mut blocks = Vec::with_capacity(centrals.len());
    for e in centrals {
        blocks.push(block_units(alg, e, &mut rng)?);
    }
    let dims: Vec<usize> = blocks.iter().map(BlockUnits::size).collect();
    let total: usize = dims.iter().map(|n| n * n).sum();
    if total != alg.dim() {
        return Err(Error::NotSemisimple(format!(
            "blocks {dims:?} account for {total} dimensions, algebra has {}",
            alg.dim()
        )));
    }
    let spec = StarAlgebraSpec::new(dims)?;
    let iso = WedderburnIso {
        spec: spec.clone(),
        ambient_dim: alg.ambient_dim(),
        blocks,
    };
    verify_iso(alg, &iso)?;
    Ok((spec, iso))
}

fn block_units(
    alg: &SpannedSubalgebra,
    e: CMatrix,
    rng: &mut crate::linalg::SeededRng,
) -> Result<BlockUnits> {
    let mut span = OrthoBasis::new(Field::Complex);
    for b in alg.basis() {
        span.insert(&e.matmul(b));
    }
    let dim = span.len();
    let n = (dim as f64).sqrt().round() as usize;
    if n * n != dim || n == 0 {
        return Err(Error::NotSemisimple(format!(
            "block of dimension {dim} is not a square"
        )));
    }
    let block_alg = SpannedSubalgebra::from_parts(alg.ambient_dim(), span.into_basis(), false);
    for _ in 0..MAX_ATTEMPTS {
        let h = block_alg.random_hermitian(rng);
        let mut minimal = split_projection(&e, &h)?;
        if minimal.len() != n {
            continue;
        }
        // smallest trace first, ties keep the spectral order
        minimal.sort_by_key(|f| f.trace().re.round() as i64);
        let f1 = minimal[0].clone();
        let mut corner = OrthoBasis::new(Field::Complex);
        for b in block_alg.basis() {
            corner.insert(&f1.matmul(b).matmul(&f1));
        }
        if corner.len() != 1 {
            continue;
        }
        let f1_trace = f1.trace().re;
        let mut columns = vec![f1.clone()];
        for fj in &minimal[1..] {
            let x = block_alg
                .basis()
                .iter()
                .map(|b| fj.matmul(b).matmul(&f1))
                .max_by(|a, b| a.frobenius_norm().total_cmp(&b.frobenius_norm()))
                .expect("block basis is non-empty");
            // x†x = c f₁ with c > 0
            let c = x.adjoint().matmul(&x).trace().re / f1_trace;
            if c <= 1e-12 {
                return Err(Error::NotSemisimple(
                    "minimal projections are not connected".into(),
                ));
            }
            columns.push(x.scale_real(1.0 / c.sqrt()));
        }
        let units = BlockUnits {
            central: e.clone(),
            columns,
            minimal_trace: f1_trace,
        };
        let mut sum = CMatrix::zeros(e.rows(), e.cols());
        for j in 0..n {
            sum += &units.unit(j, j);
        }
        let defect = sum.distance(&e);
        if defect > ISO_TOL {
            return Err(Error::NotSemisimple(format!(
                "diagonal matrix units miss the block unit by {defect:.3e}"
            )));
        }
        return Ok(units);
    }
    Err(Error::NotSemisimple(format!(
        "no minimal projection found after {MAX_ATTEMPTS} attempts"
    )))
}

fn verify_iso(alg: &SpannedSubalgebra, iso: &WedderburnIso) -> Result<()> {
    for b in alg.basis() {
        let back = iso.backward(&iso.forward(b)?)?;
        let r = back.distance(b);
        if r > ISO_TOL {
            return Err(Error::NotSemisimple(format!("round trip residual {r:.3e}")));
        }
    }
    let basis = alg.basis();
    let d = basis.len();
    for k in 0..d.min(8) {
        let l = (3 * k + 1) % d;
        let lhs = iso.forward(&basis[k].matmul(&basis[l]))?;
        let rhs = iso.forward(&basis[k])?.mul(&iso.forward(&basis[l])?);
        let r = lhs.distance(&rhs);
        if r > ISO_TOL {
            return Err(Error::NotSemisimple(format!(
                "multiplicativity residual {r:.3e}"
            )));
        }
    }
    Ok(())
}

/// Sorting helper re-exported for callers comparing projection sets.
pub fn sort_projections(ps: &mut [CMatrix]) {
    ps.sort_by(projection_order);
}

/// Rank of a projection via its range basis.
pub fn projection_rank(e: &CMatrix) -> Result<usize> {
    Ok(range_basis(e)?.cols())
}
