use std::path::Path;

use serde_json::json;

use crate::algebra::wedderburn_decompose;
use crate::encoding::{
    assert_canonical_equivalence, canonical_decompose, check_associative_hom, check_convexity,
    check_jordan_hom, check_spectrum_preserving, compare_encodings, RealLinearMap, Verdict,
};
use crate::error::Error;
use crate::fermions::{
    bravyi_kitaev, even_subalgebra, jordan_wigner, parity_operator, rep_as_encoding, CarRep,
};

use super::report::{RunReport, TOL_AXIOM, TOL_CAR, TOL_RECON};
use super::{CompareArgs, DecomposeArgs, Encoding, EvenSplitArgs, Outcome, VerifyCarArgs};

/// `compare` builds dense intertwiner systems of size `4ⁿ × 4ⁿ`.
pub const COMPARE_MAX_MODES: usize = 4;

pub(crate) fn car_rep(encoding: Encoding, modes: usize) -> Result<CarRep, Error> {
    match encoding {
        Encoding::Jw => jordan_wigner(modes),
        Encoding::Bk => bravyi_kitaev(modes),
    }
}

fn encoding_name(e: Encoding) -> &'static str {
    match e {
        Encoding::Jw => "jw",
        Encoding::Bk => "bk",
    }
}

pub(crate) fn verify_car(a: &VerifyCarArgs) -> Result<RunReport, Outcome> {
    let rep = car_rep(a.encoding, a.modes)?;
    let mut report = RunReport::new("verify-car", a.common.seed).tolerance(TOL_CAR, a.tol);
    for r in rep.car_residuals() {
        report.check(
            format!("anticomm_adjoint[{},{}]", r.j, r.k),
            r.mixed,
            TOL_CAR,
        );
        report.check(format!("anticomm[{},{}]", r.j, r.k), r.pure, TOL_CAR);
    }
    report.result = json!({
        "encoding": encoding_name(a.encoding),
        "modes": a.modes,
        "max_residual": rep.max_car_residual(),
    });
    Ok(report)
}

pub(crate) fn load_map(path: &Path) -> Result<RealLinearMap, Error> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

/// Runs the four axiom checks; returns whether all passed.
pub(crate) fn axiom_checks(
    report: &mut RunReport,
    map: &RealLinearMap,
    samples: usize,
    seed: u64,
) -> bool {
    let tol = report.tolerances[TOL_AXIOM];
    let mut ok = report.absorb(
        "spectrum",
        &check_spectrum_preserving(map, samples, seed, tol),
        TOL_AXIOM,
    );
    ok &= report.absorb(
        "convexity",
        &check_convexity(map, samples, seed, tol),
        TOL_AXIOM,
    );
    ok &= report.absorb(
        "jordan_hom",
        &check_jordan_hom(map, samples, seed, tol),
        TOL_AXIOM,
    );
    ok &= report.absorb(
        "associative_hom",
        &check_associative_hom(map, samples, seed, tol),
        TOL_AXIOM,
    );
    ok
}

pub(crate) fn decompose(a: &DecomposeArgs) -> Result<RunReport, Outcome> {
    let map = load_map(&a.input)?;
    let mut report = RunReport::new("decompose", a.common.seed)
        .tolerance(TOL_AXIOM, a.axiom_tol)
        .tolerance(TOL_RECON, a.recon_tol);
    if !axiom_checks(&mut report, &map, a.samples, a.common.seed) {
        report.result = json!({ "error": "map fails the encoding axioms" });
        return Ok(report);
    }
    match canonical_decompose(&map) {
        Ok(form) => {
            let recon = assert_canonical_equivalence(&map, &form, a.samples, a.recon_tol)?;
            report.check("reconstruction", recon.residual, TOL_RECON);
            report.result = json!({ "form": form, "reconstruction_residual": recon.residual });
        }
        Err(Error::NotHomomorphism { axiom, residual }) => {
            report.check(format!("decompose.{axiom}"), residual, TOL_AXIOM);
            report.result = json!({ "error": format!("not a homomorphism: {axiom}") });
        }
        Err(e) => return Err(Outcome::Failed(e.to_string())),
    }
    Ok(report)
}

pub(crate) fn even_split(a: &EvenSplitArgs) -> Result<RunReport, Outcome> {
    if !(2..=4).contains(&a.modes) {
        return Err(Outcome::Usage(format!(
            "even-split supports 2 to 4 modes, got {}",
            a.modes
        )));
    }
    let rep = car_rep(a.encoding, a.modes)?;
    let mut report = RunReport::new("even-split", a.common.seed).tolerance(TOL_RECON, a.recon_tol);
    let parity = parity_operator(&rep)?;
    let alg = even_subalgebra(&rep)?;
    let half = rep.dim() / 2;
    report.check_exact("even_dimension", alg.dim(), 2 * half * half);
    let (spec, iso) = wedderburn_decompose(&alg, a.common.seed)?;
    let dims = spec.block_dims().to_vec();
    report.check_exact("block_count", dims.len(), 2);
    for (i, &d) in dims.iter().enumerate() {
        report.check_exact(format!("block_dim[{i}]"), d, half);
    }
    let c = iso.central_projections();
    if c.len() == 2 {
        let straight = c[0]
            .distance(&parity.e_plus)
            .max(c[1].distance(&parity.e_minus));
        let swapped = c[0]
            .distance(&parity.e_minus)
            .max(c[1].distance(&parity.e_plus));
        report.check(
            "central_projections_vs_parity",
            straight.min(swapped),
            TOL_RECON,
        );
    }
    report.result = json!({
        "encoding": encoding_name(a.encoding),
        "modes": a.modes,
        "dimension": alg.dim(),
        "blocks": dims,
    });
    Ok(report)
}

fn resolve_operand(s: &str, modes: usize) -> Result<RealLinearMap, Outcome> {
    let enc = match s {
        "jw" => Some(Encoding::Jw),
        "bk" => Some(Encoding::Bk),
        _ => None,
    };
    match enc {
        Some(e) => {
            if modes > COMPARE_MAX_MODES {
                return Err(Outcome::Usage(format!(
                    "compare supports at most {COMPARE_MAX_MODES} modes"
                )));
            }
            Ok(rep_as_encoding(&car_rep(e, modes)?)?)
        }
        None => Ok(load_map(Path::new(s))?),
    }
}

pub(crate) fn compare(a: &CompareArgs) -> Result<RunReport, Outcome> {
    let ma = resolve_operand(&a.a, a.modes)?;
    let mb = resolve_operand(&a.b, a.modes)?;
    if ma.source() != mb.source() || ma.target() != mb.target() {
        return Err(Outcome::Usage(
            "operands have different source or target specs".into(),
        ));
    }
    let mut report = RunReport::new("compare", a.common.seed).tolerance(TOL_RECON, a.recon_tol);
    match compare_encodings(&ma, &mb, a.samples, a.common.seed)? {
        Verdict::Equivalent { witness, residual } => {
            report.check_exact("signature_mismatch", 0, 0);
            report.check("witness_residual", residual, TOL_RECON);
            report.result =
                json!({ "verdict": "equivalent", "residual": residual, "witness": witness });
        }
        Verdict::Inequivalent { a: sa, b: sb } => {
            report.check_exact("signature_mismatch", 1, 0);
            report.result = json!({ "verdict": "inequivalent", "a": sa, "b": sb });
        }
    }
    Ok(report)
}
