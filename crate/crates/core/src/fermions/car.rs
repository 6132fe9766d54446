use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{c64, CMatrix};

/// Largest supported number of modes (matrices of size 1024).
pub const MAX_MODES: usize = 10;

/// Annihilators `a₀ … a_{n−1}` acting on `(ℂ²)^{⊗n}`, qubit 0 leftmost.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CarRepr", into = "CarRepr")]
pub struct CarRep {
    modes: usize,
    name: String,
    annihilators: Vec<CMatrix>,
}

#[derive(Serialize, Deserialize)]
struct CarRepr {
    modes: usize,
    name: String,
    annihilators: Vec<CMatrix>,
}

impl TryFrom<CarRepr> for CarRep {
    type Error = Error;

    fn try_from(r: CarRepr) -> Result<Self> {
        if r.modes != r.annihilators.len() {
            return Err(Error::DimensionMismatch(format!(
                "modes = {} but {} annihilators given",
                r.modes,
                r.annihilators.len()
            )));
        }
        CarRep::new(r.name, r.annihilators)
    }
}

impl From<CarRep> for CarRepr {
    fn from(c: CarRep) -> Self {
        CarRepr {
            modes: c.modes,
            name: c.name,
            annihilators: c.annihilators,
        }
    }
}

pub(crate) fn ensure_modes(modes: usize) -> Result<()> {
    if modes == 0 {
        return Err(Error::InvalidArgument(
            "at least one mode is required".into(),
        ));
    }
    if modes > MAX_MODES {
        return Err(Error::TooManyModes {
            max: MAX_MODES,
            got: modes,
        });
    }
    Ok(())
}

impl CarRep {
    /// Checks shapes only; see [`CarRep::ensure_car`] for the relations.
    pub fn new(name: impl Into<String>, annihilators: Vec<CMatrix>) -> Result<Self> {
        let modes = annihilators.len();
        ensure_modes(modes)?;
        let dim = 1usize << modes;
        for (k, a) in annihilators.iter().enumerate() {
            if a.shape() != (dim, dim) {
                return Err(Error::DimensionMismatch(format!(
                    "annihilator {k} is {:?}, expected {dim}×{dim}",
                    a.shape()
                )));
            }
        }
        Ok(CarRep {
            modes,
            name: name.into(),
            annihilators,
        })
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        1 << self.modes
    }

    pub fn annihilators(&self) -> &[CMatrix] {
        &self.annihilators
    }

    pub fn annihilator(&self, k: usize) -> &CMatrix {
        &self.annihilators[k]
    }

    pub fn creator(&self, k: usize) -> CMatrix {
        self.annihilators[k].adjoint()
    }

    /// `a_k* a_k`
    pub fn number(&self, k: usize) -> CMatrix {
        self.creator(k).matmul(&self.annihilators[k])
    }

    /// Residuals of both relation families for every ordered pair.
    pub fn car_residuals(&self) -> Vec<CarResidual> {
        let id = CMatrix::identity(self.dim());
        let adj: Vec<CMatrix> = self.annihilators.iter().map(CMatrix::adjoint).collect();
        let mut out = Vec::with_capacity(self.modes * self.modes);
        for (j, aj) in self.annihilators.iter().enumerate() {
            for (k, ak_adj) in adj.iter().enumerate() {
                let mut mixed = aj.anticommutator(ak_adj);
                if j == k {
                    mixed -= &id;
                }
                let pure = aj.anticommutator(&self.annihilators[k]);
                out.push(CarResidual {
                    j,
                    k,
                    mixed: mixed.frobenius_norm(),
                    pure: pure.frobenius_norm(),
                });
            }
        }
        out
    }

    /// Largest residual over all pairs and both families.
    pub fn max_car_residual(&self) -> f64 {
        self.car_residuals()
            .iter()
            .map(|r| r.mixed.max(r.pure))
            .fold(0.0, f64::max)
    }

    pub fn ensure_car(&self, tol: f64) -> Result<()> {
        for r in self.car_residuals() {
            if !(r.mixed <= tol && r.pure <= tol) {
                return Err(Error::BadCar(format!(
                    "pair ({}, {}): ‖{{a_j, a_k*}} − δ𝟙‖ = {:.3e}, ‖{{a_j, a_k}}‖ = {:.3e}",
                    r.j, r.k, r.mixed, r.pure
                )));
            }
        }
        Ok(())
    }

    /// `a_k ↦ V a_k V†`
    pub fn conjugated(&self, v: &CMatrix, name: impl Into<String>) -> Result<CarRep> {
        let vd = v.adjoint();
        CarRep::new(
            name,
            self.annihilators
                .iter()
                .map(|a| v.matmul(a).matmul(&vd))
                .collect(),
        )
    }
}

/// `‖{a_j, a_k*} − δ_jk 𝟙‖_F` and `‖{a_j, a_k}‖_F`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CarResidual {
    pub j: usize,
    pub k: usize,
    pub mixed: f64,
    pub pure: f64,
}

fn pauli_x() -> CMatrix {
    CMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]])
}

fn pauli_y() -> CMatrix {
    CMatrix::from_rows(&[
        &[c64(0.0, 0.0), c64(0.0, -1.0)],
        &[c64(0.0, 1.0), c64(0.0, 0.0)],
    ])
}

fn pauli_z() -> CMatrix {
    CMatrix::diag_real(&[1.0, -1.0])
}

/// `σ⁻ = |0⟩⟨1|`
pub fn sigma_minus() -> CMatrix {
    CMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]])
}

/// Tensor product of single-qubit factors, qubit 0 leftmost.
fn tensor(factors: &[CMatrix]) -> CMatrix {
    factors
        .iter()
        .skip(1)
        .fold(factors[0].clone(), |acc, f| acc.kron(f))
}

/// `a_k = Z^{⊗k} ⊗ σ⁻ ⊗ 𝟙^{⊗(n−k−1)}`
pub fn jordan_wigner(modes: usize) -> Result<CarRep> {
    ensure_modes(modes)?;
    let a = (0..modes)
        .map(|k| {
            let f: Vec<CMatrix> = (0..modes)
                .map(|q| match q.cmp(&k) {
                    std::cmp::Ordering::Less => pauli_z(),
                    std::cmp::Ordering::Equal => sigma_minus(),
                    std::cmp::Ordering::Greater => CMatrix::identity(2),
                })
                .collect();
            tensor(&f)
        })
        .collect();
    CarRep::new("jw", a)
}

/// Bravyi-Kitaev index sets on a Fenwick tree: qubit `k` stores the parity
/// of modes `k & (k+1) ..= k`.
pub mod bk_sets {
    /// Qubits other than `j` whose stored parity includes mode `j`.
    pub fn update(j: usize, n: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut k = j | (j + 1);
        while k < n {
            out.push(k);
            k |= k + 1;
        }
        out
    }

    /// Qubits whose parities sum to the parity of modes `0..j`.
    pub fn parity(j: usize) -> Vec<usize> {
        prefix(j, 0)
    }

    /// Qubits whose parities, added to qubit `j`, give the occupation of `j`.
    pub fn flip(j: usize) -> Vec<usize> {
        prefix(j, j & (j + 1))
    }

    /// `parity \ flip`
    pub fn remainder(j: usize) -> Vec<usize> {
        let f = flip(j);
        parity(j).into_iter().filter(|k| !f.contains(k)).collect()
    }

    /// Fenwick nodes covering modes `lo..j`, ascending.
    fn prefix(j: usize, lo: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut k = j as isize - 1;
        while k >= lo as isize {
            out.push(k as usize);
            k = (k & (k + 1)) - 1;
        }
        out.reverse();
        out
    }
}

/// `a_j = ½ X_U (X_j Z_P + i Y_j Z_R)` with update, parity and remainder
/// sets from [`bk_sets`].
pub fn bravyi_kitaev(modes: usize) -> Result<CarRep> {
    ensure_modes(modes)?;
    let a = (0..modes)
        .map(|j| {
            let u = bk_sets::update(j, modes);
            let p = bk_sets::parity(j);
            let r = bk_sets::remainder(j);
            let string = |on_j: CMatrix, zs: &[usize]| {
                let f: Vec<CMatrix> = (0..modes)
                    .map(|q| {
                        if q == j {
                            on_j.clone()
                        } else if u.contains(&q) {
                            pauli_x()
                        } else if zs.contains(&q) {
                            pauli_z()
                        } else {
                            CMatrix::identity(2)
                        }
                    })
                    .collect();
                tensor(&f)
            };
            let mut out = string(pauli_x(), &p);
            out.axpy(c64(0.0, 1.0), &string(pauli_y(), &r));
            out.scale_real(0.5)
        })
        .collect();
    CarRep::new("bk", a)
}

/// Permutation `|n⟩ ↦ |βn mod 2⟩` from occupation to Fenwick-parity basis.
pub fn bk_basis_change(modes: usize) -> Result<CMatrix> {
    ensure_modes(modes)?;
    let dim = 1usize << modes;
    // qubit 0 is the most significant bit of the basis index
    let bit = |x: usize, q: usize| (x >> (modes - 1 - q)) & 1;
    let mut pi = CMatrix::zeros(dim, dim);
    for occ in 0..dim {
        let mut img = 0usize;
        for q in 0..modes {
            let parity = ((q & (q + 1))..=q).map(|m| bit(occ, m)).sum::<usize>() % 2;
            img |= parity << (modes - 1 - q);
        }
        pi[(img, occ)] = c64(1.0, 0.0);
    }
    Ok(pi)
}
