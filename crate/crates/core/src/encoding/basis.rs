//! The canonical real basis of `⊕ M_{nᵢ}(ℂ)`.
//!
//! Per block of size `n`, the `n²` Hermitian elements come first:
//! `E_rr` for `r = 0..n`, then for each pair `r < s` in lexicographic order
//! the symmetric element `(E_rs + E_sr)/√2` followed by the antisymmetric
//! element `i(E_rs − E_sr)/√2`. The next `n²` entries are `i` times those,
//! in the same order. Blocks follow one another in spec order.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::algebra::{AlgebraElement, StarAlgebraSpec};
use crate::linalg::{c64, CMatrix};

/// Hermitian unit basis of `M_n`, orthonormal under `Re tr(x y)`.
pub fn hermitian_unit_basis(n: usize) -> Vec<CMatrix> {
    let mut out = Vec::with_capacity(n * n);
    for r in 0..n {
        out.push(CMatrix::unit(n, r, r));
    }
    for r in 0..n {
        for s in r + 1..n {
            let mut sym = CMatrix::zeros(n, n);
            sym[(r, s)] = c64(FRAC_1_SQRT_2, 0.0);
            sym[(s, r)] = c64(FRAC_1_SQRT_2, 0.0);
            out.push(sym);
            let mut anti = CMatrix::zeros(n, n);
            anti[(r, s)] = c64(0.0, FRAC_1_SQRT_2);
            anti[(s, r)] = c64(0.0, -FRAC_1_SQRT_2);
            out.push(anti);
        }
    }
    out
}

/// Position of `E_rr` within a block's Hermitian basis.
pub fn diag_index(r: usize) -> usize {
    r
}

fn pair_index(n: usize, r: usize, s: usize) -> usize {
    debug_assert!(r < s && s < n);
    r * n - r * (r + 1) / 2 + (s - r - 1)
}

/// Position of `(E_rs + E_sr)/√2`, `r < s`.
pub fn sym_index(n: usize, r: usize, s: usize) -> usize {
    n + 2 * pair_index(n, r, s)
}

/// Position of `i(E_rs − E_sr)/√2`, `r < s`.
pub fn anti_index(n: usize, r: usize, s: usize) -> usize {
    sym_index(n, r, s) + 1
}

/// Offset of each block's first basis element in the real basis.
pub fn block_offsets(spec: &StarAlgebraSpec) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(spec.num_blocks());
    let mut acc = 0;
    for &n in spec.block_dims() {
        offsets.push(acc);
        acc += 2 * n * n;
    }
    offsets
}

/// Offsets of each block within the Hermitian-only basis (`Σ nᵢ²` long).
pub fn hermitian_block_offsets(spec: &StarAlgebraSpec) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(spec.num_blocks());
    let mut acc = 0;
    for &n in spec.block_dims() {
        offsets.push(acc);
        acc += n * n;
    }
    offsets
}

/// All `2 Σ nᵢ²` real basis elements.
pub fn real_basis(spec: &StarAlgebraSpec) -> Vec<AlgebraElement> {
    let mut out = Vec::with_capacity(spec.real_dim());
    for (b, &n) in spec.block_dims().iter().enumerate() {
        let herm = hermitian_unit_basis(n);
        for h in &herm {
            out.push(AlgebraElement::in_block(spec, b, h.clone()));
        }
        for h in &herm {
            out.push(AlgebraElement::in_block(spec, b, h.scale(c64(0.0, 1.0))));
        }
    }
    out
}

/// Hermitian basis elements only (`Σ nᵢ²` of them), block by block.
pub fn hermitian_basis(spec: &StarAlgebraSpec) -> Vec<AlgebraElement> {
    let mut out = Vec::with_capacity(spec.total_dim());
    for (b, &n) in spec.block_dims().iter().enumerate() {
        for h in hermitian_unit_basis(n) {
            out.push(AlgebraElement::in_block(spec, b, h));
        }
    }
    out
}

/// Real coordinates of a single block `x = H + iK` against the block's
/// `2n²` basis elements.
fn block_coordinates(x: &CMatrix, out: &mut Vec<f64>) {
    let n = x.rows();
    let at = |r: usize, s: usize| x[(r, s)];
    let mut herm = Vec::with_capacity(n * n);
    let mut anti = Vec::with_capacity(n * n);
    // H = (x + x†)/2, K = (x − x†)/(2i)
    for r in 0..n {
        herm.push(at(r, r).re);
        anti.push(at(r, r).im);
    }
    for r in 0..n {
        for s in r + 1..n {
            let (a, b) = (at(r, s), at(s, r));
            // H_rs = (a + b̄)/2, K_rs = (a − b̄)/(2i)
            let h = (a + b.conj()) * 0.5;
            let k = (a - b.conj()) * c64(0.0, -0.5);
            // ⟨sym, M⟩ = √2 Re M_rs,  ⟨anti, M⟩ = √2 Im M_rs for Hermitian M
            herm.push(std::f64::consts::SQRT_2 * h.re);
            herm.push(std::f64::consts::SQRT_2 * h.im);
            anti.push(std::f64::consts::SQRT_2 * k.re);
            anti.push(std::f64::consts::SQRT_2 * k.im);
        }
    }
    out.extend(herm);
    out.extend(anti);
}

/// Real coordinates of `x` in the canonical real basis.
pub fn real_coordinates(x: &AlgebraElement) -> Vec<f64> {
    let mut out = Vec::new();
    for b in x.blocks() {
        block_coordinates(b, &mut out);
    }
    out
}

/// Coordinates of a Hermitian element against [`hermitian_basis`]; the
/// anti-Hermitian part of `x` is ignored.
pub fn hermitian_coordinates(x: &AlgebraElement) -> Vec<f64> {
    let mut out = Vec::new();
    for b in x.blocks() {
        let n = b.rows();
        let mut full = Vec::with_capacity(2 * n * n);
        block_coordinates(b, &mut full);
        out.extend_from_slice(&full[..n * n]);
    }
    out
}
