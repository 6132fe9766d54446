use std::path::PathBuf;

use rand::Rng;
use serde_json::json;

use crate::algebra::{quaternion_embed, AlgebraElement, Quaternion, StarAlgebraSpec};
use crate::encoding::{
    assert_canonical_equivalence, build_from_canonical, canonical_decompose, check_associative_hom,
    check_jordan_hom, check_spectrum_preserving, compare_encodings, extend_jordan_hom_with,
    random_canonical_form, JordanMap, RealLinearMap, Verdict, WordOrder,
};
use crate::error::Result;
use crate::fermions::{bravyi_kitaev, even_decompose, jordan_wigner, rep_as_encoding};
use crate::linalg::{c64, seeded_rng, CMatrix, SeededRng};

use super::report::{RunReport, TOL_AXIOM, TOL_CAR, TOL_RECON};
use super::{execute, Command, Common, DecomposeArgs, Outcome, SelftestArgs, EXIT_FAIL};
use super::{DEFAULT_AXIOM_TOL, DEFAULT_CAR_TOL, DEFAULT_RECON_TOL};

const SAMPLES: usize = 10;
const MAX_TARGET: usize = 24;

pub(crate) fn selftest(a: &SelftestArgs) -> std::result::Result<RunReport, Outcome> {
    let seed = a.common.seed;
    let mut report = RunReport::new("selftest", seed)
        .tolerance(TOL_CAR, DEFAULT_CAR_TOL)
        .tolerance(TOL_AXIOM, DEFAULT_AXIOM_TOL)
        .tolerance(TOL_RECON, DEFAULT_RECON_TOL);
    if a.cases > 0 {
        let mut rng = seeded_rng(seed);
        round_trips(
            &mut report,
            "round_trip",
            a.cases,
            &mut rng,
            a.inject_fault,
            |c| StarAlgebraSpec::full(1 + c % 3),
        );
        round_trips(
            &mut report,
            "sector_round_trip",
            a.cases,
            &mut rng,
            false,
            |_| StarAlgebraSpec::new(vec![2, 2]).expect("valid spec"),
        );
        extension(&mut report);
        fermions(&mut report, seed);
        quaternions(&mut report, a.cases, &mut rng);
        negative_controls(&mut report, seed);
    }
    report.result = json!({ "cases": a.cases, "checks": report.checks.len() });
    Ok(report)
}

/// Records `Err` as a failed check carrying NaN.
fn record(report: &mut RunReport, name: &str, value: Result<f64>, tol: &str) {
    match value {
        Ok(r) => report.check(name, r, tol),
        Err(_) => report.check(name, f64::NAN, tol),
    };
}

fn round_trips(
    report: &mut RunReport,
    label: &str,
    cases: usize,
    rng: &mut SeededRng,
    inject_fault: bool,
    source_for: impl Fn(usize) -> StarAlgebraSpec,
) {
    for c in 0..cases {
        let source = source_for(c);
        let case_seed: u64 = rng.gen();
        let built = random_canonical_form(&source, MAX_TARGET, rng)
            .and_then(|(target, form)| Ok((build_from_canonical(&form, &source, &target)?, form)));
        let (mut map, form) = match built {
            Ok(x) => x,
            Err(_) => {
                report.check(format!("{label}[{c}].build"), f64::NAN, TOL_AXIOM);
                continue;
            }
        };
        if inject_fault && c == 0 {
            let img = &mut map.images_mut()[0];
            img.blocks_mut()[0][(0, 0)] += c64(1e-3, 0.0);
        }
        let axioms = [
            check_spectrum_preserving(&map, SAMPLES, case_seed, DEFAULT_AXIOM_TOL),
            check_jordan_hom(&map, SAMPLES, case_seed, DEFAULT_AXIOM_TOL),
            check_associative_hom(&map, SAMPLES, case_seed, DEFAULT_AXIOM_TOL),
        ];
        for r in &axioms {
            report.absorb(&format!("{label}[{c}].{}", r.check), r, TOL_AXIOM);
        }
        match canonical_decompose(&map) {
            Ok(back) => {
                let mismatched = usize::from(back.p != form.p) + usize::from(back.q != form.q);
                report.check_exact(format!("{label}[{c}].multiplicities"), mismatched, 0);
                let recon = assert_canonical_equivalence(&map, &back, SAMPLES, DEFAULT_RECON_TOL)
                    .map(|i| i.residual);
                record(
                    report,
                    &format!("{label}[{c}].reconstruction"),
                    recon,
                    TOL_RECON,
                );
            }
            Err(_) => {
                report.check(format!("{label}[{c}].decompose"), f64::NAN, TOL_RECON);
            }
        }
    }
}

fn extension(report: &mut RunReport) {
    for n in [2, 3] {
        let spec = StarAlgebraSpec::full(n);
        let conj = RealLinearMap::conjugation(&spec);
        let jm = JordanMap::from_fn(&spec, &spec, AlgebraElement::transpose).expect("spec matches");
        let fwd = extend_jordan_hom_with(&jm, WordOrder::Forward);
        let rev = extend_jordan_hom_with(&jm, WordOrder::Reversed);
        let to_conj = fwd
            .as_ref()
            .map(|m| max_image_distance(m, &conj))
            .map_err(clone_err);
        record(
            report,
            &format!("extension[{n}].transpose_to_conjugation"),
            to_conj,
            TOL_CAR,
        );
        let orders = match (&fwd, &rev) {
            (Ok(f), Ok(r)) => Ok(max_image_distance(f, r)),
            _ => Err(crate::Error::InvalidArgument("extension failed".into())),
        };
        record(
            report,
            &format!("extension[{n}].word_orders_agree"),
            orders,
            TOL_AXIOM,
        );
    }
}

fn clone_err(e: &crate::Error) -> crate::Error {
    crate::Error::InvalidArgument(e.to_string())
}

fn max_image_distance(a: &RealLinearMap, b: &RealLinearMap) -> f64 {
    a.images()
        .iter()
        .zip(b.images())
        .map(|(x, y)| x.distance(y))
        .fold(0.0, f64::max)
}

fn fermions(report: &mut RunReport, seed: u64) {
    for n in 1..=4 {
        record(
            report,
            &format!("car.jw[{n}]"),
            jordan_wigner(n).map(|r| r.max_car_residual()),
            TOL_CAR,
        );
        record(
            report,
            &format!("car.bk[{n}]"),
            bravyi_kitaev(n).map(|r| r.max_car_residual()),
            TOL_CAR,
        );
    }
    for n in 2..=3 {
        match even_decompose(&jordan_wigner(n).expect("n within range"), seed) {
            Ok(split) => {
                let half = 1usize << (n - 1);
                report.check_exact(
                    format!("even[{n}].dimension"),
                    split.dimension,
                    2 * half * half,
                );
                report.check_exact(
                    format!("even[{n}].block0"),
                    split.spec.block_dims()[0],
                    half,
                );
                report.check_exact(
                    format!("even[{n}].block1"),
                    split.spec.block_dims()[1],
                    half,
                );
                report.check(
                    format!("even[{n}].central_projections"),
                    split.projection_residual,
                    TOL_RECON,
                );
            }
            Err(_) => {
                report.check(format!("even[{n}].decompose"), f64::NAN, TOL_RECON);
            }
        }
    }
    let jw_bk = (|| {
        let a = rep_as_encoding(&jordan_wigner(2)?)?;
        let b = rep_as_encoding(&bravyi_kitaev(2)?)?;
        Ok(match compare_encodings(&a, &b, SAMPLES, seed)? {
            Verdict::Equivalent { residual, .. } => residual,
            Verdict::Inequivalent { .. } => f64::INFINITY,
        })
    })();
    record(report, "jw_vs_bk[2].witness", jw_bk, TOL_RECON);
}

fn random_quaternion(rng: &mut SeededRng) -> Quaternion {
    Quaternion::new(
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
    )
}

fn quaternions(report: &mut RunReport, cases: usize, rng: &mut SeededRng) {
    let (mut lin, mut mul) = (0.0f64, 0.0f64);
    for _ in 0..cases {
        let (x, y) = (random_quaternion(rng), random_quaternion(rng));
        let s: f64 = rng.gen_range(-2.0..2.0);
        let e = quaternion_embed;
        lin = lin.max(e(x.scale(s) + y).distance(&(&e(x).scale_real(s) + &e(y))));
        mul = mul.max(e(x * y).distance(&e(x).matmul(&e(y))));
    }
    report.check("quaternion.linearity", lin, TOL_CAR);
    report.check("quaternion.multiplicativity", mul, TOL_CAR);
}

/// Each control passes when the faulty input is rejected.
fn negative_controls(report: &mut RunReport, seed: u64) {
    let spec = StarAlgebraSpec::full(2);
    let twice = RealLinearMap::identity(&spec).scaled(2.0);
    let rejected = !check_spectrum_preserving(&twice, SAMPLES, seed, DEFAULT_AXIOM_TOL).passed();
    report.check_exact("control.scaling_fails_spectrum", usize::from(!rejected), 0);

    let v = CMatrix::diag_real(&[1.0, 2.0]);
    let squeezed = RealLinearMap::from_fn(&spec, &spec, |x| {
        AlgebraElement::from_blocks(vec![v.matmul(x.block(0)).matmul(&v.adjoint())])
    })
    .expect("spec matches");
    let rejected = !check_jordan_hom(&squeezed, SAMPLES, seed, DEFAULT_AXIOM_TOL).passed();
    report.check_exact(
        "control.non_unitary_fails_jordan",
        usize::from(!rejected),
        0,
    );

    let code = perturbed_file_exit_code(&spec, seed);
    report.check_exact(
        "control.perturbed_file_exit_1",
        usize::from(code != Some(EXIT_FAIL)),
        0,
    );
}

fn perturbed_file_exit_code(spec: &StarAlgebraSpec, seed: u64) -> Option<i32> {
    let mut map = RealLinearMap::identity(spec);
    map.images_mut()[1].blocks_mut()[0][(0, 0)] += c64(1e-3, 0.0);
    let path: PathBuf = std::env::temp_dir().join(format!(
        "encdec-selftest-{}-{seed}.json",
        std::process::id()
    ));
    std::fs::write(&path, serde_json::to_string(&map).ok()?).ok()?;
    let cmd = Command::Decompose(DecomposeArgs {
        input: path.clone(),
        axiom_tol: DEFAULT_AXIOM_TOL,
        recon_tol: DEFAULT_RECON_TOL,
        samples: SAMPLES,
        common: Common { seed, json: false },
    });
    let code = execute(cmd, &mut std::io::sink(), &mut std::io::sink());
    let _ = std::fs::remove_file(&path);
    Some(code)
}
