//! Sampled checks of the encoding axioms. Failures are report entries, not
//! errors; a NaN residual counts as a failure.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{jordan_spectral_decompose, AlgebraElement, StarAlgebraSpec};
use crate::linalg::{seeded_rng, spectrum, SeededRng, DEFAULT_CLUSTER_TOL};

use super::map::{JordanMap, RealLinearMap};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckItem {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckItem {
    pub fn new(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        // written so that NaN fails
        let pass = residual <= tolerance;
        CheckItem {
            name: name.into(),
            residual,
            tolerance,
            pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub samples: usize,
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn item(&self, name: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.name == name)
    }

    pub fn max_residual(&self) -> f64 {
        self.items.iter().map(|i| i.residual).fold(0.0, nan_max)
    }
}

/// `max` that keeps NaN.
pub(crate) fn nan_max(acc: f64, r: f64) -> f64 {
    if r.is_nan() || acc.is_nan() {
        f64::NAN
    } else {
        acc.max(r)
    }
}

type Eval<'a> = dyn Fn(&AlgebraElement) -> AlgebraElement + 'a;

fn eval_map(map: &RealLinearMap) -> impl Fn(&AlgebraElement) -> AlgebraElement + '_ {
    move |x| map.apply(x).expect("sample drawn from the source spec")
}

fn eval_jordan(map: &JordanMap) -> impl Fn(&AlgebraElement) -> AlgebraElement + '_ {
    move |x| map.apply(x).expect("sample drawn from the source spec")
}

/// Hausdorff distance of clustered spectra; infinite when the image is not
/// Hermitian.
fn spectrum_distance(a: &AlgebraElement, image: &AlgebraElement) -> f64 {
    if !image.is_finite() {
        return f64::NAN;
    }
    let sa = spectrum(&a.to_matrix(), DEFAULT_CLUSTER_TOL);
    let sb = spectrum(&image.to_matrix(), DEFAULT_CLUSTER_TOL);
    match (sa, sb) {
        (Ok(sa), Ok(sb)) => sa.hausdorff(&sb),
        _ => f64::INFINITY,
    }
}

pub fn check_spectrum_preserving(
    map: &RealLinearMap,
    samples: usize,
    seed: u64,
    tol: f64,
) -> CheckReport {
    let f = eval_map(map);
    let mut rng = seeded_rng(seed);
    let mut worst = 0.0;
    for _ in 0..samples {
        let a = AlgebraElement::random_hermitian(map.source(), &mut rng);
        worst = nan_max(worst, spectrum_distance(&a, &f(&a)));
    }
    CheckReport {
        check: "spectrum".into(),
        samples,
        items: vec![CheckItem::new("spectrum", worst, tol)],
    }
}

pub fn check_convexity(map: &RealLinearMap, samples: usize, seed: u64, tol: f64) -> CheckReport {
    let f = eval_map(map);
    let mut rng = seeded_rng(seed);
    let (mut convex, mut endpoints, mut homog) = (0.0, 0.0, 0.0);
    for _ in 0..samples {
        let a1 = AlgebraElement::random_hermitian(map.source(), &mut rng);
        let a2 = AlgebraElement::random_hermitian(map.source(), &mut rng);
        let lambda: f64 = rng.gen();
        let (g1, g2) = (f(&a1), f(&a2));
        let mix = a1.scale_real(lambda).add(&a2.scale_real(1.0 - lambda));
        let expect = g1.scale_real(lambda).add(&g2.scale_real(1.0 - lambda));
        convex = nan_max(convex, f(&mix).distance(&expect));

        let at0 = a1.scale_real(0.0).add(&a2.scale_real(1.0));
        let at1 = a1.scale_real(1.0).add(&a2.scale_real(0.0));
        endpoints = nan_max(endpoints, f(&at0).distance(&g2).max(f(&at1).distance(&g1)));

        let s: f64 = rng.gen_range(-2.0..2.0);
        homog = nan_max(homog, f(&a1.scale_real(s)).distance(&g1.scale_real(s)));
    }
    CheckReport {
        check: "convexity".into(),
        samples,
        items: vec![
            CheckItem::new("convexity", convex, tol),
            CheckItem::new("endpoints", endpoints, tol),
            CheckItem::new("homogeneity", homog, tol),
        ],
    }
}

/// Pairs of distinct spectral projections of a random Hermitian element.
pub(crate) fn random_projection_pair(
    spec: &StarAlgebraSpec,
    rng: &mut SeededRng,
) -> (AlgebraElement, AlgebraElement) {
    loop {
        let a = AlgebraElement::random_hermitian(spec, rng);
        let parts = jordan_spectral_decompose(&a.to_matrix()).expect("random element is Hermitian");
        if parts.len() < 2 {
            continue;
        }
        let i = rng.gen_range(0..parts.len());
        let mut j = rng.gen_range(0..parts.len() - 1);
        if j >= i {
            j += 1;
        }
        return (
            split_blocks(spec, &parts[i].1),
            split_blocks(spec, &parts[j].1),
        );
    }
}

fn split_blocks(spec: &StarAlgebraSpec, m: &crate::linalg::CMatrix) -> AlgebraElement {
    let mut offset = 0;
    let mut blocks = Vec::with_capacity(spec.num_blocks());
    for &n in spec.block_dims() {
        blocks.push(m.block(offset, offset, n, n));
        offset += n;
    }
    AlgebraElement::from_blocks(blocks)
}

/// Max of `‖γ(p)γ(q) + γ(q)γ(p)‖_F` over `pairs` random orthogonal
/// projection pairs.
pub fn projection_orthogonality_residual(map: &RealLinearMap, pairs: usize, seed: u64) -> f64 {
    projection_residual(&eval_map(map), map.source(), pairs, seed)
}

fn projection_residual(f: &Eval, spec: &StarAlgebraSpec, pairs: usize, seed: u64) -> f64 {
    if spec.matrix_size() < 2 {
        // only one nonzero projection exists
        return 0.0;
    }
    let mut rng = seeded_rng(seed);
    let mut worst = 0.0;
    for _ in 0..pairs {
        let (p, q) = random_projection_pair(spec, &mut rng);
        let (gp, gq) = (f(&p), f(&q));
        worst = nan_max(worst, gp.mul(&gq).add(&gq.mul(&gp)).frobenius_norm());
    }
    worst
}

fn jordan_report(
    f: &Eval,
    spec: &StarAlgebraSpec,
    samples: usize,
    seed: u64,
    tol: f64,
) -> CheckReport {
    let mut rng = seeded_rng(seed);
    let mut worst = 0.0;
    for _ in 0..samples {
        let a = AlgebraElement::random_hermitian(spec, &mut rng);
        let b = AlgebraElement::random_hermitian(spec, &mut rng);
        let lhs = f(&a.jordan(&b));
        let rhs = f(&a).jordan(&f(&b));
        worst = nan_max(worst, lhs.distance(&rhs));
    }
    let proj = projection_residual(f, spec, samples, seed.wrapping_add(1));
    CheckReport {
        check: "jordan_hom".into(),
        samples,
        items: vec![
            CheckItem::new("jordan_product", worst, tol),
            CheckItem::new("projection_orthogonality", proj, tol),
        ],
    }
}

pub fn check_jordan_hom(map: &RealLinearMap, samples: usize, seed: u64, tol: f64) -> CheckReport {
    jordan_report(&eval_map(map), map.source(), samples, seed, tol)
}

/// Same as [`check_jordan_hom`] for a map known only on Hermitian elements.
pub fn check_jordan_map(map: &JordanMap, samples: usize, seed: u64, tol: f64) -> CheckReport {
    jordan_report(&eval_jordan(map), map.source(), samples, seed, tol)
}

pub fn check_associative_hom(
    map: &RealLinearMap,
    samples: usize,
    seed: u64,
    tol: f64,
) -> CheckReport {
    let f = eval_map(map);
    let mut rng = seeded_rng(seed);
    let (mut add, mut mul, mut homog, mut star) = (0.0, 0.0, 0.0, 0.0);
    for _ in 0..samples {
        let x = AlgebraElement::random(map.source(), &mut rng);
        let y = AlgebraElement::random(map.source(), &mut rng);
        let (fx, fy) = (f(&x), f(&y));
        add = nan_max(add, f(&x.add(&y)).distance(&fx.add(&fy)));
        mul = nan_max(mul, f(&x.mul(&y)).distance(&fx.mul(&fy)));
        let s: f64 = rng.gen_range(-2.0..2.0);
        homog = nan_max(homog, f(&x.scale_real(s)).distance(&fx.scale_real(s)));
        star = nan_max(star, f(&x.adjoint()).distance(&fx.adjoint()));
    }
    let unit = f(&AlgebraElement::unit(map.source())).distance(&AlgebraElement::unit(map.target()));
    CheckReport {
        check: "associative_hom".into(),
        samples,
        items: vec![
            CheckItem::new("additivity", add, tol),
            CheckItem::new("multiplicativity", mul, tol),
            CheckItem::new("unitality", unit, tol),
            CheckItem::new("homogeneity", homog, tol),
            CheckItem::new("star", star, tol),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c64, CMatrix};

    fn m2() -> StarAlgebraSpec {
        StarAlgebraSpec::full(2)
    }

    #[test]
    fn identity_passes_everything() {
        let id = RealLinearMap::identity(&StarAlgebraSpec::new(vec![2, 1]).unwrap());
        assert!(check_spectrum_preserving(&id, 10, 1, 1e-8).passed());
        assert!(check_convexity(&id, 10, 1, 1e-8).passed());
        assert!(check_jordan_hom(&id, 10, 1, 1e-8).passed());
        assert!(check_associative_hom(&id, 10, 1, 1e-8).passed());
    }

    #[test]
    fn doubling_breaks_spectra() {
        let twice = RealLinearMap::identity(&m2()).scaled(2.0);
        let r = check_spectrum_preserving(&twice, 10, 3, 1e-8);
        assert!(!r.passed());
        // unit-norm Hermitian samples have |λ|max ≤ 1
        assert!(r.max_residual() > 0.1 && r.max_residual() <= 1.0 + 1e-12);
    }

    #[test]
    fn transpose_is_jordan_but_not_associative() {
        let t = RealLinearMap::transpose(&StarAlgebraSpec::full(3));
        assert!(check_jordan_hom(&t, 20, 2, 1e-10).passed());
        let r = check_associative_hom(&t, 20, 2, 1e-8);
        assert!(!r.item("multiplicativity").unwrap().pass);
        assert!(r.item("additivity").unwrap().pass);
        assert!(r.item("star").unwrap().pass);
    }

    #[test]
    fn conjugation_is_a_real_star_automorphism() {
        let c = RealLinearMap::conjugation(&m2());
        let r = check_associative_hom(&c, 20, 4, 1e-8);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn non_unitary_similarity_fails_jordan_check() {
        let v = CMatrix::diag_real(&[1.0, 2.0]);
        let map = RealLinearMap::from_fn(&m2(), &m2(), |x| {
            AlgebraElement::from_blocks(vec![v.matmul(x.block(0)).matmul(&v.adjoint())])
        })
        .unwrap();
        let r = check_jordan_hom(&map, 10, 5, 1e-8);
        assert!(!r.passed());
    }

    #[test]
    fn corrupted_table_fails_convexity() {
        let mut map = RealLinearMap::identity(&m2());
        map.images_mut()[3].blocks_mut()[0][(0, 1)] = c64(f64::NAN, 0.0);
        let r = check_convexity(&map, 5, 6, 1e-8);
        assert!(!r.passed());
        assert!(r.max_residual().is_nan());
    }

    #[test]
    fn projection_pairs_are_orthogonal() {
        let mut rng = seeded_rng(8);
        let spec = StarAlgebraSpec::new(vec![2, 3]).unwrap();
        for _ in 0..10 {
            let (p, q) = random_projection_pair(&spec, &mut rng);
            assert!(p.mul(&q).frobenius_norm() < 1e-12);
            assert!(p.mul(&p).distance(&p) < 1e-12);
        }
    }
}
