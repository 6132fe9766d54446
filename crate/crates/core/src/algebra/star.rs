//! Finite-dimensional C*-algebras presented as direct sums of full matrix
//! blocks, and their elements.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{c64, gaussian_matrix, random_hermitian, CMatrix, Complex64};

/// `⊕ᵢ M_{nᵢ}(ℂ)`, given by its block dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SpecRepr", into = "SpecRepr")]
pub struct StarAlgebraSpec {
    block_dims: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct SpecRepr {
    blocks: Vec<usize>,
}

impl TryFrom<SpecRepr> for StarAlgebraSpec {
    type Error = Error;

    fn try_from(r: SpecRepr) -> Result<Self> {
        StarAlgebraSpec::new(r.blocks)
    }
}

impl From<StarAlgebraSpec> for SpecRepr {
    fn from(s: StarAlgebraSpec) -> Self {
        SpecRepr {
            blocks: s.block_dims,
        }
    }
}

impl StarAlgebraSpec {
    pub fn new(block_dims: Vec<usize>) -> Result<Self> {
        if block_dims.is_empty() || block_dims.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "block dimensions must be a non-empty list of positive integers, got {block_dims:?}"
            )));
        }
        Ok(StarAlgebraSpec { block_dims })
    }

    /// Single full matrix algebra `M_n`.
    pub fn full(n: usize) -> Self {
        assert!(n > 0, "block dimension must be positive");
        StarAlgebraSpec {
            block_dims: vec![n],
        }
    }

    pub fn block_dims(&self) -> &[usize] {
        &self.block_dims
    }

    pub fn num_blocks(&self) -> usize {
        self.block_dims.len()
    }

    /// Complex dimension `Σ nᵢ²`.
    pub fn total_dim(&self) -> usize {
        self.block_dims.iter().map(|n| n * n).sum()
    }

    /// Real dimension `2 Σ nᵢ²`.
    pub fn real_dim(&self) -> usize {
        2 * self.total_dim()
    }

    /// Size of the block-diagonal matrix realisation, `Σ nᵢ`.
    pub fn matrix_size(&self) -> usize {
        self.block_dims.iter().sum()
    }

    pub fn ensure_same(&self, other: &StarAlgebraSpec) -> Result<()> {
        if self != other {
            return Err(Error::SpecMismatch(format!(
                "{:?} vs {:?}",
                self.block_dims, other.block_dims
            )));
        }
        Ok(())
    }
}

/// `α = α₁ + … + α_m`, one matrix per block.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraElement {
    blocks: Vec<CMatrix>,
}

impl AlgebraElement {
    pub fn new(spec: &StarAlgebraSpec, blocks: Vec<CMatrix>) -> Result<Self> {
        let e = AlgebraElement { blocks };
        e.ensure_spec(spec)?;
        Ok(e)
    }

    /// Builds an element without a spec check; the block shapes define it.
    pub fn from_blocks(blocks: Vec<CMatrix>) -> Self {
        AlgebraElement { blocks }
    }

    pub fn zero(spec: &StarAlgebraSpec) -> Self {
        AlgebraElement {
            blocks: spec
                .block_dims
                .iter()
                .map(|&n| CMatrix::zeros(n, n))
                .collect(),
        }
    }

    pub fn unit(spec: &StarAlgebraSpec) -> Self {
        AlgebraElement {
            blocks: spec
                .block_dims
                .iter()
                .map(|&n| CMatrix::identity(n))
                .collect(),
        }
    }

    /// Element supported on block `index` only.
    pub fn in_block(spec: &StarAlgebraSpec, index: usize, m: CMatrix) -> Self {
        let mut e = Self::zero(spec);
        e.blocks[index] = m;
        e
    }

    /// Central projection onto block `index`.
    pub fn block_unit(spec: &StarAlgebraSpec, index: usize) -> Self {
        Self::in_block(spec, index, CMatrix::identity(spec.block_dims[index]))
    }

    pub fn spec(&self) -> StarAlgebraSpec {
        StarAlgebraSpec {
            block_dims: self.blocks.iter().map(|b| b.rows()).collect(),
        }
    }

    pub fn ensure_spec(&self, spec: &StarAlgebraSpec) -> Result<()> {
        let ok = self.blocks.len() == spec.block_dims.len()
            && self
                .blocks
                .iter()
                .zip(&spec.block_dims)
                .all(|(b, &n)| b.shape() == (n, n));
        if !ok {
            let shapes: Vec<_> = self.blocks.iter().map(|b| b.shape()).collect();
            return Err(Error::SpecMismatch(format!(
                "element blocks {shapes:?} do not match spec {:?}",
                spec.block_dims
            )));
        }
        Ok(())
    }

    pub fn blocks(&self) -> &[CMatrix] {
        &self.blocks
    }

    pub fn blocks_mut(&mut self) -> &mut [CMatrix] {
        &mut self.blocks
    }

    pub fn block(&self, i: usize) -> &CMatrix {
        &self.blocks[i]
    }

    pub fn into_blocks(self) -> Vec<CMatrix> {
        self.blocks
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&CMatrix, &CMatrix) -> CMatrix) -> Self {
        assert_eq!(
            self.blocks.len(),
            other.blocks.len(),
            "block count mismatch"
        );
        AlgebraElement {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    fn map_blocks(&self, f: impl Fn(&CMatrix) -> CMatrix) -> Self {
        AlgebraElement {
            blocks: self.blocks.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.matmul(b))
    }

    /// `(xy + yx)/2`
    pub fn jordan(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.anticommutator(b).scale_real(0.5))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.map_blocks(|b| b.scale(s))
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.map_blocks(|b| b.scale_real(s))
    }

    pub fn axpy(&mut self, s: Complex64, other: &Self) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            a.axpy(s, b);
        }
    }

    /// `α*`
    pub fn adjoint(&self) -> Self {
        self.map_blocks(CMatrix::adjoint)
    }

    /// `ᾱ`, entrywise conjugate.
    pub fn conj(&self) -> Self {
        self.map_blocks(CMatrix::conj)
    }

    pub fn transpose(&self) -> Self {
        self.map_blocks(CMatrix::transpose)
    }

    pub fn hermitian_part(&self) -> Self {
        self.map_blocks(CMatrix::hermitian_part)
    }

    pub fn antihermitian_part(&self) -> Self {
        self.map_blocks(CMatrix::antihermitian_part)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.blocks
            .iter()
            .map(|b| b.frobenius_norm().powi(2))
            .sum::<f64>()
            .sqrt()
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.distance(b).powi(2))
            .sum::<f64>()
            .sqrt()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.blocks.iter().all(|b| b.is_hermitian(tol))
    }

    pub fn is_finite(&self) -> bool {
        self.blocks.iter().all(CMatrix::is_finite)
    }

    pub fn trace(&self) -> Complex64 {
        self.blocks.iter().map(CMatrix::trace).sum()
    }

    /// Block-diagonal matrix realisation.
    pub fn to_matrix(&self) -> CMatrix {
        CMatrix::direct_sum(&self.blocks)
    }

    /// Random Hermitian element with unit Frobenius norm.
    pub fn random_hermitian<R: Rng + ?Sized>(spec: &StarAlgebraSpec, rng: &mut R) -> Self {
        let raw = AlgebraElement {
            blocks: spec
                .block_dims
                .iter()
                .map(|&n| random_hermitian(n, rng))
                .collect(),
        };
        let norm = raw.frobenius_norm();
        raw.scale_real(1.0 / norm)
    }

    /// Random element with unit Frobenius norm.
    pub fn random<R: Rng + ?Sized>(spec: &StarAlgebraSpec, rng: &mut R) -> Self {
        let raw = AlgebraElement {
            blocks: spec
                .block_dims
                .iter()
                .map(|&n| gaussian_matrix(n, n, rng))
                .collect(),
        };
        let norm = raw.frobenius_norm();
        raw.scale_real(1.0 / norm)
    }

    pub fn i_times(&self) -> Self {
        self.scale(c64(0.0, 1.0))
    }
}
