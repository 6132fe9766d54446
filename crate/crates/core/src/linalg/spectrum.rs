use serde::{Deserialize, Serialize};

use super::eig::herm_eig;
use super::matrix::CMatrix;
use crate::error::Result;

/// Default absolute gap below which eigenvalues are treated as equal.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-8;

/// Set of distinct eigenvalues; multiplicities are discarded.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumSet {
    pub values: Vec<f64>,
    pub cluster_tol: f64,
}

impl SpectrumSet {
    /// Clusters ascending-sorted input: a value joins the running cluster
    /// when it lies within `cluster_tol` of the previous value. Each cluster
    /// is replaced by its mean.
    pub fn from_sorted(values: &[f64], cluster_tol: f64) -> Self {
        let clusters = cluster_sorted(values, cluster_tol);
        SpectrumSet {
            values: clusters.iter().map(|c| c.mean).collect(),
            cluster_tol,
        }
    }

    pub fn from_unsorted(values: &[f64], cluster_tol: f64) -> Self {
        let mut v = values.to_vec();
        v.sort_by(f64::total_cmp);
        Self::from_sorted(&v, cluster_tol)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Hausdorff distance between the two sets on the real line.
    pub fn hausdorff(&self, other: &SpectrumSet) -> f64 {
        if self.is_empty() && other.is_empty() {
            return 0.0;
        }
        if self.is_empty() || other.is_empty() {
            return f64::INFINITY;
        }
        directed(&self.values, &other.values).max(directed(&other.values, &self.values))
    }
}

fn directed(from: &[f64], to: &[f64]) -> f64 {
    from.iter()
        .map(|a| {
            to.iter()
                .map(|b| (a - b).abs())
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}

/// A run of eigenvalues merged by [`cluster_sorted`].
#[derive(Clone, Debug)]
pub(crate) struct Cluster {
    pub mean: f64,
    pub start: usize,
    pub end: usize,
}

pub(crate) fn cluster_sorted(values: &[f64], tol: f64) -> Vec<Cluster> {
    let mut out: Vec<Cluster> = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        match out.last_mut() {
            Some(c) if v - values[i - 1] <= tol => c.end = i + 1,
            _ => out.push(Cluster {
                mean: 0.0,
                start: i,
                end: i + 1,
            }),
        }
    }
    for c in &mut out {
        let slice = &values[c.start..c.end];
        c.mean = slice.iter().sum::<f64>() / slice.len() as f64;
    }
    out
}

/// Distinct eigenvalues of a Hermitian matrix.
pub fn spectrum(m: &CMatrix, cluster_tol: f64) -> Result<SpectrumSet> {
    let eig = herm_eig(m)?;
    Ok(SpectrumSet::from_sorted(&eig.values, cluster_tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projection_spectrum() {
        let s = spectrum(&CMatrix::diag_real(&[1.0, 1.0, 0.0]), DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(s.values, vec![0.0, 1.0]);
    }

    #[test]
    fn identity_spectrum_is_singleton() {
        let s = spectrum(&CMatrix::identity(5), DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(s.values, vec![1.0]);
    }

    #[test]
    fn near_degenerate_values_merge() {
        let s = spectrum(&CMatrix::diag_real(&[0.5, 0.5 + 1e-12, 2.0]), 1e-9).unwrap();
        assert_eq!(s.len(), 2);
        assert!((s.values[0] - 0.5).abs() < 1e-12);
        assert_eq!(s.values[1], 2.0);
    }

    #[test]
    fn hausdorff_of_scaled_set() {
        let a = SpectrumSet::from_unsorted(&[-1.0, 0.5, 3.0], 1e-8);
        let b = SpectrumSet::from_unsorted(&[-2.0, 1.0, 6.0], 1e-8);
        assert!((a.hausdorff(&b) - 3.0).abs() < 1e-15);
        assert_eq!(a.hausdorff(&a), 0.0);
    }
}
