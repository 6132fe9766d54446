//! Extension of a Jordan homomorphism on Hermitian elements to the unique
//! associative *-homomorphism agreeing with it.

use crate::algebra::{AlgebraElement, StarAlgebraSpec};
use crate::error::{Error, Result};
use crate::linalg::{c64, herm_eig, CMatrix};

use super::basis::{
    anti_index, diag_index, hermitian_block_offsets, hermitian_unit_basis, sym_index,
};
use super::checks::{check_associative_hom, check_jordan_map};
use super::map::{JordanMap, RealLinearMap};

const PRECHECK_TOL: f64 = 1e-8;
const CHECK_SAMPLES: usize = 20;

/// Which family of words is used to write `i𝟙` of a block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordOrder {
    /// `E_rr·S_rs·A_rs` and `S_rs·A_rs`
    Forward,
    /// `A_rs·S_rs·E_rr` and `A_rs·S_rs`
    Reversed,
}

/// Words of Hermitian basis indices (within one block of size `n`).
fn words(n: usize, order: WordOrder) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for r in 0..n {
        for s in 0..n {
            if r == s {
                continue;
            }
            let (lo, hi) = (r.min(s), r.max(s));
            let (sym, anti) = (sym_index(n, lo, hi), anti_index(n, lo, hi));
            let mut w = vec![diag_index(r), sym, anti];
            if order == WordOrder::Reversed {
                w.reverse();
            }
            out.push(w);
            if r < s {
                let mut w = vec![sym, anti];
                if order == WordOrder::Reversed {
                    w.reverse();
                }
                out.push(w);
            }
        }
    }
    out
}

/// Minimum-norm real coefficients `c` minimising `‖Σ cₖ wₖ − target‖_F`.
fn real_least_squares(words: &[CMatrix], target: &CMatrix) -> Result<(Vec<f64>, f64)> {
    let k = words.len();
    let gram = CMatrix::from_fn(k, k, |a, b| c64(words[a].inner(&words[b]).re, 0.0));
    let rhs: Vec<f64> = words.iter().map(|w| w.inner(target).re).collect();
    let eig = herm_eig(&gram)?;
    let cutoff = 1e-12 * eig.values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let mut coeffs = vec![0.0; k];
    for (idx, &lambda) in eig.values.iter().enumerate() {
        if lambda <= cutoff {
            continue;
        }
        let v = eig.vector(idx);
        let proj: f64 = v.iter().zip(&rhs).map(|(vi, b)| vi.re * b).sum();
        for (c, vi) in coeffs.iter_mut().zip(&v) {
            *c += vi.re * proj / lambda;
        }
    }
    let mut fit = target.scale_real(-1.0);
    for (c, w) in coeffs.iter().zip(words) {
        fit.axpy(c64(*c, 0.0), w);
    }
    Ok((coeffs, fit.frobenius_norm()))
}

/// `Γ(i𝟙_b)` for each source block `b`.
fn block_square_roots(map: &JordanMap, order: WordOrder) -> Result<Vec<AlgebraElement>> {
    let source = map.source();
    let offsets = hermitian_block_offsets(source);
    let mut out = Vec::with_capacity(source.num_blocks());
    for (b, &n) in source.block_dims().iter().enumerate() {
        if n == 1 {
            return Err(Error::AmbiguousExtension { block: b });
        }
        let herm = hermitian_unit_basis(n);
        let ws = words(n, order);
        let values: Vec<CMatrix> = ws
            .iter()
            .map(|w| {
                w.iter()
                    .skip(1)
                    .fold(herm[w[0]].clone(), |acc, &h| acc.matmul(&herm[h]))
            })
            .collect();
        let i1 = CMatrix::identity(n).scale(c64(0.0, 1.0));
        let (coeffs, fit) = real_least_squares(&values, &i1)?;
        if fit > 1e-10 {
            return Err(Error::NotSemisimple(format!(
                "i𝟙 of block {b} not reached by words (residual {fit:.3e})"
            )));
        }
        let mut k = AlgebraElement::zero(map.target());
        for (c, w) in coeffs.iter().zip(&ws) {
            if c.abs() < 1e-15 {
                continue;
            }
            let img = w
                .iter()
                .skip(1)
                .fold(map.images()[offsets[b] + w[0]].clone(), |acc, &h| {
                    acc.mul(&map.images()[offsets[b] + h])
                });
            k.axpy(c64(*c, 0.0), &img);
        }
        out.push(k);
    }
    Ok(out)
}

/// Unique associative extension `Γ` with `Γ(a + ib) = γ(a) + Γ(i𝟙)γ(b)`.
pub fn extend_jordan_hom(map: &JordanMap) -> Result<RealLinearMap> {
    extend_jordan_hom_with(map, WordOrder::Forward)
}

pub fn extend_jordan_hom_with(map: &JordanMap, order: WordOrder) -> Result<RealLinearMap> {
    let pre = check_jordan_map(map, CHECK_SAMPLES, 0, PRECHECK_TOL);
    if !pre.passed() {
        return Err(Error::NotJordanHom {
            residual: pre.max_residual(),
        });
    }
    let roots = block_square_roots(map, order)?;
    let source: &StarAlgebraSpec = map.source();
    let offsets = hermitian_block_offsets(source);
    let mut images = Vec::with_capacity(source.real_dim());
    for (b, &n) in source.block_dims().iter().enumerate() {
        let herm = &map.images()[offsets[b]..offsets[b] + n * n];
        images.extend(herm.iter().cloned());
        images.extend(herm.iter().map(|g| roots[b].mul(g)));
    }
    let ext = RealLinearMap::new(source.clone(), map.target().clone(), images)?;
    let post = check_associative_hom(&ext, CHECK_SAMPLES, 0, PRECHECK_TOL);
    if let Some(bad) = post.items.iter().find(|i| !i.pass) {
        return Err(Error::NotHomomorphism {
            axiom: bad.name.clone(),
            residual: bad.residual,
        });
    }
    Ok(ext)
}
