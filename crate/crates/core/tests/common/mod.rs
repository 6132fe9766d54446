//! Reference computations written without the library's decomposition code.
#![allow(dead_code)]

use encdec::algebra::{AlgebraElement, StarAlgebraSpec};
use encdec::encoding::{basis::real_basis, CanonicalForm, RealLinearMap};
use encdec::linalg::{c64, CMatrix};

/// Block-diagonal matrix with the given blocks placed along the diagonal.
pub fn block_diag(parts: &[CMatrix]) -> CMatrix {
    let n: usize = parts.iter().map(|p| p.rows()).sum();
    let mut m = CMatrix::zeros(n, n);
    let mut off = 0;
    for p in parts {
        for r in 0..p.rows() {
            for c in 0..p.cols() {
                m[(off + r, off + c)] = p[(r, c)];
            }
        }
        off += p.rows();
    }
    m
}

/// `U(⊕ xᵢ^{⊕p} ⊕ x̄ᵢ^{⊕q})U*` assembled entry by entry.
pub fn canonical_image(form: &CanonicalForm, x: &AlgebraElement) -> AlgebraElement {
    let nt = form.unitary.len();
    let blocks = (0..nt)
        .map(|j| {
            let mut parts = Vec::new();
            for (i, xi) in x.blocks().iter().enumerate() {
                for _ in 0..form.p[i][j] {
                    parts.push(xi.clone());
                }
                let bar = CMatrix::from_fn(xi.rows(), xi.cols(), |r, c| xi[(r, c)].conj());
                for _ in 0..form.q[i][j] {
                    parts.push(bar.clone());
                }
            }
            let u = &form.unitary[j];
            u.matmul(&block_diag(&parts)).matmul(&u.adjoint())
        })
        .collect();
    AlgebraElement::from_blocks(blocks)
}

/// Max distance between `map` and the canonical form over the whole real basis.
pub fn reconstruction_gap(map: &RealLinearMap, form: &CanonicalForm) -> f64 {
    real_basis(map.source())
        .iter()
        .zip(map.images())
        .map(|(x, img)| img.distance(&canonical_image(form, x)))
        .fold(0.0, f64::max)
}

/// `Σᵢ (pᵢⱼ + qᵢⱼ) nᵢ = mⱼ` for every target block.
pub fn accounting_holds(
    form: &CanonicalForm,
    source: &StarAlgebraSpec,
    target: &StarAlgebraSpec,
) -> bool {
    target.block_dims().iter().enumerate().all(|(j, &m)| {
        source
            .block_dims()
            .iter()
            .enumerate()
            .map(|(i, &n)| (form.p[i][j] + form.q[i][j]) * n)
            .sum::<usize>()
            == m
    })
}

/// Anticommutator `ab + ba` computed by explicit triple loop.
pub fn anticomm(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let n = a.rows();
    CMatrix::from_fn(n, n, |r, c| {
        let mut s = c64(0.0, 0.0);
        for k in 0..n {
            s += a[(r, k)] * b[(k, c)] + b[(r, k)] * a[(k, c)];
        }
        s
    })
}

/// Worst residual of `{aⱼ, aₖ*} = δⱼₖ𝟙` and `{aⱼ, aₖ} = 0`.
pub fn car_defect(ops: &[CMatrix]) -> f64 {
    let dim = ops[0].rows();
    let id = CMatrix::identity(dim);
    let zero = CMatrix::zeros(dim, dim);
    let mut worst: f64 = 0.0;
    for (j, a) in ops.iter().enumerate() {
        for (k, b) in ops.iter().enumerate() {
            let want = if j == k { &id } else { &zero };
            worst = worst.max(anticomm(a, &b.adjoint()).distance(want));
            worst = worst.max(anticomm(a, b).frobenius_norm());
        }
    }
    worst
}

/// `Π (𝟙 − 2aₖ*aₖ)`.
pub fn parity(ops: &[CMatrix]) -> CMatrix {
    let dim = ops[0].rows();
    let id = CMatrix::identity(dim);
    ops.iter().fold(id.clone(), |acc, a| {
        acc.matmul(&(&id - &a.adjoint().matmul(a).scale_real(2.0)))
    })
}
