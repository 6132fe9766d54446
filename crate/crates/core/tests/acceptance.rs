//! Acceptance suite. Prints one line per criterion and exits non-zero if any
//! criterion fails.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use encdec::algebra::{
    algebra_closure, center, quaternion_embed, AlgebraElement, Quaternion, StarAlgebraSpec,
};
use encdec::encoding::basis::real_basis;
use encdec::encoding::{
    assert_canonical_equivalence, build_from_canonical, canonical_decompose, check_associative_hom,
    check_jordan_hom, check_spectrum_preserving, compare_encodings, extend_jordan_hom_with,
    projection_orthogonality_residual, random_canonical_form, JordanMap, RealLinearMap, Verdict,
    WordOrder,
};
use encdec::fermions::{
    bravyi_kitaev, even_decompose, even_subalgebra, jordan_wigner, rep_as_encoding,
};
use encdec::linalg::{c64, random_unitary_with, seeded_rng, CMatrix};
use rand::Rng;

use common::{accounting_holds, car_defect, parity, reconstruction_gap};

const SEED: u64 = 20240611;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_s: u64) -> Result<(), String> {
    ensure(elapsed.as_secs_f64() < limit_s as f64, || {
        format!("took {elapsed:.1?}, limit {limit_s} s")
    })
}

fn car_verification() -> Outcome {
    let t = Instant::now();
    let mut worst: f64 = 0.0;
    for n in 1..=5 {
        for rep in [jordan_wigner(n), bravyi_kitaev(n)] {
            let rep = rep.map_err(|e| e.to_string())?;
            worst = worst
                .max(car_defect(rep.annihilators()))
                .max(rep.max_car_residual());
        }
    }
    ensure(worst <= 1e-12, || format!("max CAR residual {worst:.3e}"))?;
    within(t.elapsed(), 5)?;
    Ok(format!("max residual {worst:.1e}, {:.1?}", t.elapsed()))
}

fn car_simplicity() -> Outcome {
    let t = Instant::now();
    for n in 1..=3 {
        let rep = jordan_wigner(n).map_err(|e| e.to_string())?;
        let alg = algebra_closure(rep.annihilators(), true).map_err(|e| e.to_string())?;
        let z = center(&alg).map_err(|e| e.to_string())?;
        let full = 1usize << (2 * n);
        ensure(alg.dim() == full && z.dim() == 1, || {
            format!(
                "n = {n}: closure {} (want {full}), center {} (want 1)",
                alg.dim(),
                z.dim()
            )
        })?;
    }
    within(t.elapsed(), 30)?;
    Ok(format!(
        "dims 4, 16, 64 with trivial center, {:.1?}",
        t.elapsed()
    ))
}

fn even_structure() -> Outcome {
    let t = Instant::now();
    let mut worst: f64 = 0.0;
    for n in 2..=4 {
        for rep in [jordan_wigner(n), bravyi_kitaev(n)] {
            let rep = rep.map_err(|e| e.to_string())?;
            let half = 1usize << (n - 1);
            let dim = even_subalgebra(&rep).map_err(|e| e.to_string())?.dim();
            ensure(dim == 2 * half * half, || {
                format!("{} n = {n}: even dimension {dim}", rep.name())
            })?;
            let split = even_decompose(&rep, SEED).map_err(|e| e.to_string())?;
            ensure(split.spec.block_dims() == [half, half], || {
                format!(
                    "{} n = {n}: blocks {:?}",
                    rep.name(),
                    split.spec.block_dims()
                )
            })?;
            let p = parity(rep.annihilators());
            let id = CMatrix::identity(rep.dim());
            let plus = (&id + &p).scale_real(0.5);
            let minus = (&id - &p).scale_real(0.5);
            let c = split.iso.central_projections();
            let gap = (c[0].distance(&plus).max(c[1].distance(&minus)))
                .min(c[0].distance(&minus).max(c[1].distance(&plus)));
            worst = worst.max(gap);
        }
    }
    ensure(worst <= 1e-8, || {
        format!("central projections off by {worst:.3e}")
    })?;
    within(t.elapsed(), 60)?;
    Ok(format!(
        "projection residual {worst:.1e}, {:.1?}",
        t.elapsed()
    ))
}

fn simple_source_round_trip() -> Outcome {
    let t = Instant::now();
    let mut rng = seeded_rng(SEED);
    let (mut axiom, mut recon) = (0.0f64, 0.0f64);
    for case in 0..100 {
        let source = StarAlgebraSpec::full(1 + case % 3);
        let (target, form) =
            random_canonical_form(&source, 24, &mut rng).map_err(|e| e.to_string())?;
        let map = build_from_canonical(&form, &source, &target).map_err(|e| e.to_string())?;
        for r in [
            check_spectrum_preserving(&map, 10, case as u64, 1e-8),
            check_jordan_hom(&map, 10, case as u64, 1e-8),
            check_associative_hom(&map, 10, case as u64, 1e-8),
        ] {
            ensure(r.passed(), || {
                format!(
                    "case {case}: {} fails, residual {:.3e}",
                    r.check,
                    r.max_residual()
                )
            })?;
            axiom = axiom.max(r.max_residual());
        }
        let back = canonical_decompose(&map).map_err(|e| format!("case {case}: {e}"))?;
        ensure(back.p == form.p && back.q == form.q, || {
            format!(
                "case {case}: recovered p = {:?} q = {:?}, built p = {:?} q = {:?}",
                back.p, back.q, form.p, form.q
            )
        })?;
        let sampled = assert_canonical_equivalence(&map, &back, 10, 1e-8)
            .map_err(|e| e.to_string())?
            .residual;
        let r = reconstruction_gap(&map, &back).max(sampled);
        ensure(r <= 1e-8, || {
            format!("case {case}: reconstruction residual {r:.3e}")
        })?;
        recon = recon.max(r);
    }
    within(t.elapsed(), 120)?;
    Ok(format!(
        "axioms {axiom:.1e}, reconstruction {recon:.1e}, {:.1?}",
        t.elapsed()
    ))
}

fn semisimple_source_round_trip() -> Outcome {
    let t = Instant::now();
    let mut rng = seeded_rng(SEED + 1);
    let source = StarAlgebraSpec::new(vec![2, 2]).map_err(|e| e.to_string())?;
    let mut asymmetric = 0;
    for case in 0..50 {
        let (target, form) =
            random_canonical_form(&source, 24, &mut rng).map_err(|e| e.to_string())?;
        let map = build_from_canonical(&form, &source, &target).map_err(|e| e.to_string())?;
        let back = canonical_decompose(&map).map_err(|e| format!("case {case}: {e}"))?;
        ensure(back.p == form.p && back.q == form.q, || {
            format!(
                "case {case}: recovered p = {:?} q = {:?}, built p = {:?} q = {:?}",
                back.p, back.q, form.p, form.q
            )
        })?;
        ensure(accounting_holds(&back, &source, &target), || {
            format!("case {case}: accounting fails")
        })?;
        if back.p[0] != back.p[1] || back.q[0] != back.q[1] {
            asymmetric += 1;
        }
    }
    ensure(asymmetric > 0, || {
        "no sector-asymmetric form was sampled".into()
    })?;
    within(t.elapsed(), 60)?;
    Ok(format!(
        "50 forms, {asymmetric} sector-asymmetric, {:.1?}",
        t.elapsed()
    ))
}

/// Orthogonal projections `VΠ₁V*`, `VΠ₂V*` with disjoint random supports.
fn projection_pair<R: Rng>(n: usize, rng: &mut R) -> (CMatrix, CMatrix) {
    let v = random_unitary_with(n, rng);
    let cut = rng.gen_range(1..n);
    let end = rng.gen_range(cut + 1..=n);
    let diag = |range: std::ops::Range<usize>| {
        CMatrix::diag_real(
            &(0..n)
                .map(|k| if range.contains(&k) { 1.0 } else { 0.0 })
                .collect::<Vec<_>>(),
        )
    };
    (
        v.matmul(&diag(0..cut)).matmul(&v.adjoint()),
        v.matmul(&diag(cut..end)).matmul(&v.adjoint()),
    )
}

fn projection_identity() -> Outcome {
    let mut rng = seeded_rng(SEED + 2);
    let source = StarAlgebraSpec::full(3);
    let mut maps = Vec::new();
    for _ in 0..4 {
        let (target, form) =
            random_canonical_form(&source, 24, &mut rng).map_err(|e| e.to_string())?;
        maps.push(build_from_canonical(&form, &source, &target).map_err(|e| e.to_string())?);
    }
    let mut worst: f64 = 0.0;
    for k in 0..200 {
        let map = &maps[k % maps.len()];
        let (p, q) = projection_pair(3, &mut rng);
        let gp = map
            .apply(&AlgebraElement::from_blocks(vec![p]))
            .map_err(|e| e.to_string())?;
        let gq = map
            .apply(&AlgebraElement::from_blocks(vec![q]))
            .map_err(|e| e.to_string())?;
        let r = gp
            .blocks()
            .iter()
            .zip(gq.blocks())
            .map(|(a, b)| common::anticomm(a, b).frobenius_norm())
            .sum::<f64>();
        worst = worst.max(r);
    }
    for (k, map) in maps.iter().enumerate() {
        worst = worst.max(projection_orthogonality_residual(map, 200, SEED + k as u64));
    }
    ensure(worst <= 1e-10, || {
        format!("max ‖γ(p)γ(q) + γ(q)γ(p)‖ = {worst:.3e}")
    })?;
    Ok(format!(
        "max residual {worst:.1e} over 200 test pairs and 800 library pairs"
    ))
}

fn extension() -> Outcome {
    let (mut to_conj, mut orders) = (0.0f64, 0.0f64);
    for n in [2, 3] {
        let spec = StarAlgebraSpec::full(n);
        let gamma = JordanMap::from_fn(&spec, &spec, AlgebraElement::transpose)
            .map_err(|e| e.to_string())?;
        let fwd = extend_jordan_hom_with(&gamma, WordOrder::Forward).map_err(|e| e.to_string())?;
        let rev = extend_jordan_hom_with(&gamma, WordOrder::Reversed).map_err(|e| e.to_string())?;
        for ((x, a), b) in real_basis(&spec).iter().zip(fwd.images()).zip(rev.images()) {
            let bar = CMatrix::from_fn(n, n, |r, c| x.block(0)[(r, c)].conj());
            to_conj = to_conj.max(a.block(0).distance(&bar));
            orders = orders.max(a.distance(b));
        }
    }
    ensure(to_conj <= 1e-12, || {
        format!("distance to conjugation {to_conj:.3e}")
    })?;
    ensure(orders <= 1e-8, || {
        format!("word orders differ by {orders:.3e}")
    })?;
    Ok(format!(
        "to conjugation {to_conj:.1e}, word orders {orders:.1e}"
    ))
}

fn jw_bk() -> Outcome {
    let t = Instant::now();
    let mut worst: f64 = 0.0;
    for n in [2, 3] {
        let a = rep_as_encoding(&jordan_wigner(n).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let b = rep_as_encoding(&bravyi_kitaev(n).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        match compare_encodings(&a, &b, 20, SEED).map_err(|e| e.to_string())? {
            Verdict::Equivalent { witness, residual } => {
                let w = witness.block(0);
                for (x, y) in a.images().iter().zip(b.images()) {
                    let moved = w.matmul(x.block(0)).matmul(&w.adjoint());
                    worst = worst.max(moved.distance(y.block(0)));
                }
                worst = worst.max(residual).max(w.unitarity_defect());
            }
            Verdict::Inequivalent { a, b } => {
                return Err(format!("n = {n}: signatures {a:?} vs {b:?}"))
            }
        }
    }
    ensure(worst <= 1e-8, || format!("witness residual {worst:.3e}"))?;
    within(t.elapsed(), 30)?;
    Ok(format!("witness residual {worst:.1e}, {:.1?}", t.elapsed()))
}

/// Hamilton product in scalar-vector form.
fn hamilton(x: Quaternion, y: Quaternion) -> Quaternion {
    let (u, v) = ([x.b, x.c, x.d], [y.b, y.c, y.d]);
    let dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    let cross = [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ];
    Quaternion::new(
        x.a * y.a - dot,
        x.a * v[0] + y.a * u[0] + cross[0],
        x.a * v[1] + y.a * u[1] + cross[1],
        x.a * v[2] + y.a * u[2] + cross[2],
    )
}

fn quaternions() -> Outcome {
    let mut rng = seeded_rng(SEED + 3);
    let mut q = || {
        Quaternion::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        )
    };
    let e = quaternion_embed;
    let (mut lin, mut mul) = (0.0f64, 0.0f64);
    for _ in 0..100 {
        let (x, y, s) = (q(), q(), q().a * 3.0);
        let combo = Quaternion::new(s * x.a + y.a, s * x.b + y.b, s * x.c + y.c, s * x.d + y.d);
        lin = lin.max(e(combo).distance(&(&e(x).scale_real(s) + &e(y))));
        mul = mul.max(e(hamilton(x, y)).distance(&e(x).matmul(&e(y))));
    }
    ensure(lin <= 1e-12 && mul <= 1e-12, || {
        format!("linearity {lin:.3e}, multiplicativity {mul:.3e}")
    })?;
    Ok(format!("linearity {lin:.1e}, multiplicativity {mul:.1e}"))
}

fn negative_controls() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_encdec");
    let out = Command::new(bin)
        .args(["selftest", "--json", "--seed", "3"])
        .output()
        .map_err(|e| e.to_string())?;
    let report: serde_json::Value =
        serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let checks = report["checks"]
        .as_array()
        .ok_or("no checks in selftest report")?;
    let controls = [
        "control.scaling_fails_spectrum",
        "control.non_unitary_fails_jordan",
        "control.perturbed_file_exit_1",
    ];
    for name in controls {
        let found = checks
            .iter()
            .find(|c| c["name"] == name)
            .ok_or_else(|| format!("{name} missing"))?;
        ensure(found["pass"] == true, || format!("{name} did not pass"))?;
    }
    ensure(out.status.code() == Some(0), || {
        format!("selftest exit {:?}", out.status.code())
    })?;

    // the same three controls, checked directly
    let spec = StarAlgebraSpec::full(2);
    ensure(
        !check_spectrum_preserving(&RealLinearMap::identity(&spec).scaled(2.0), 10, 0, 1e-8)
            .passed(),
        || "scaled identity passes the spectrum check".into(),
    )?;
    let v = CMatrix::diag_real(&[1.0, 2.0]);
    let squeezed = RealLinearMap::from_fn(&spec, &spec, |x| {
        AlgebraElement::from_blocks(vec![v.matmul(x.block(0)).matmul(&v.adjoint())])
    })
    .map_err(|e| e.to_string())?;
    ensure(!check_jordan_hom(&squeezed, 10, 0, 1e-8).passed(), || {
        "non-unitary conjugation passes".into()
    })?;
    let mut perturbed = RealLinearMap::identity(&spec);
    perturbed.images_mut()[2].blocks_mut()[0][(1, 0)] += c64(0.0, 1e-3);
    let path = std::env::temp_dir().join(format!("encdec-acceptance-{}.json", std::process::id()));
    std::fs::write(
        &path,
        serde_json::to_string(&perturbed).map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    let status = Command::new(bin)
        .arg("decompose")
        .arg("--input")
        .arg(&path)
        .output()
        .map_err(|e| e.to_string())?
        .status;
    let _ = std::fs::remove_file(&path);
    ensure(status.code() == Some(1), || {
        format!("perturbed map file exit {:?}", status.code())
    })?;
    Ok("scaling, non-unitary and perturbed-file controls rejected".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("CAR verification, JW and BK, n = 1..5", car_verification),
        ("CAR closure is simple, n = 1..3", car_simplicity),
        (
            "even algebra splits into two parity blocks, n = 2..4",
            even_structure,
        ),
        (
            "random canonical forms round-trip, source M_n",
            simple_source_round_trip,
        ),
        (
            "random canonical forms round-trip, source M2 ⊕ M2",
            semisimple_source_round_trip,
        ),
        (
            "orthogonal projections map to anticommuting images",
            projection_identity,
        ),
        ("transpose extends to entrywise conjugation", extension),
        ("JW and BK are unitarily equivalent, n = 2, 3", jw_bk),
        ("quaternion embedding is a real *-homomorphism", quaternions),
        ("negative controls are rejected", negative_controls),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
