use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::encoding::{CheckItem, CheckReport};

pub const TOL_CAR: &str = "car";
pub const TOL_AXIOM: &str = "axiom";
pub const TOL_RECON: &str = "recon";
/// Integer-valued checks; residual is `|found − expected|`.
pub const TOL_EXACT: &str = "exact";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportCheck {
    pub name: String,
    pub residual: f64,
    pub tolerance: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub seed: u64,
    pub tolerances: BTreeMap<String, f64>,
    pub checks: Vec<ReportCheck>,
    pub passed: bool,
    pub result: serde_json::Value,
    pub wall_time_ms: u64,
}

impl RunReport {
    pub fn new(command: &str, seed: u64) -> Self {
        RunReport {
            command: command.into(),
            seed,
            tolerances: BTreeMap::new(),
            checks: Vec::new(),
            passed: true,
            result: serde_json::Value::Null,
            wall_time_ms: 0,
        }
    }

    pub fn tolerance(mut self, key: &str, value: f64) -> Self {
        self.tolerances.insert(key.into(), value);
        self
    }

    /// Records a check against a named tolerance. NaN residuals fail.
    pub fn check(&mut self, name: impl Into<String>, residual: f64, tol_key: &str) -> bool {
        let tol = self.tolerances.get(tol_key).copied().unwrap_or(0.0);
        let pass = residual <= tol;
        self.passed &= pass;
        self.checks.push(ReportCheck {
            name: name.into(),
            residual,
            tolerance: tol_key.into(),
            pass,
        });
        pass
    }

    /// Integer equality recorded as a check with the `exact` tolerance.
    pub fn check_exact(&mut self, name: impl Into<String>, found: usize, expected: usize) -> bool {
        self.tolerances.entry(TOL_EXACT.into()).or_insert(0.0);
        self.check(name, found.abs_diff(expected) as f64, TOL_EXACT)
    }

    pub fn absorb(&mut self, prefix: &str, report: &CheckReport, tol_key: &str) -> bool {
        let mut ok = true;
        for CheckItem { name, residual, .. } in &report.items {
            ok &= self.check(format!("{prefix}.{name}"), *residual, tol_key);
        }
        ok
    }

    pub fn first_failure(&self) -> Option<&ReportCheck> {
        self.checks.iter().find(|c| !c.pass)
    }

    /// Human-readable table.
    pub fn write_table(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let width = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(5)
            .max(5);
        writeln!(out, "{} (seed {})", self.command, self.seed)?;
        for c in &self.checks {
            let tol = self.tolerances.get(&c.tolerance).copied().unwrap_or(0.0);
            let mark = if c.pass { "pass" } else { "FAIL" };
            writeln!(
                out,
                "  {:<width$}  {:>10.3e}  <= {:<8.1e} {mark}",
                c.name, c.residual, tol
            )?;
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        writeln!(
            out,
            "{}: {} checks, {} failed, {} ms",
            if self.passed { "PASS" } else { "FAIL" },
            self.checks.len(),
            failed,
            self.wall_time_ms
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_follows_named_tolerance() {
        let mut r = RunReport::new("t", 0).tolerance(TOL_AXIOM, 1e-8);
        assert!(r.check("a", 1e-9, TOL_AXIOM));
        assert!(!r.check("b", f64::NAN, TOL_AXIOM));
        assert!(!r.passed);
        assert_eq!(r.first_failure().unwrap().name, "b");
        assert!(r.check_exact("dim", 8, 8));
        assert!(!r.check_exact("dim", 7, 8));
    }
}
