use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not Hermitian within tolerance")]
    NonHermitian,

    #[error("matrix is not unitary: ‖UU† − 𝟙‖_F = {defect:.3e}")]
    NotUnitary { defect: f64 },

    #[error("span is not closed under multiplication (residual {residual:.3e})")]
    NotClosed { residual: f64 },

    #[error("central projections did not stabilise after {rounds} refinement rounds")]
    CenterDegenerate { rounds: usize },

    #[error("not semisimple: {0}")]
    NotSemisimple(String),

    #[error("algebra spec mismatch: {0}")]
    SpecMismatch(String),

    #[error("map is not a Jordan homomorphism (residual {residual:.3e})")]
    NotJordanHom { residual: f64 },

    #[error("source block {block} has dimension 1; linear and antilinear extensions both exist")]
    AmbiguousExtension { block: usize },

    #[error("map is not a *-homomorphism: {axiom} residual {residual:.3e}")]
    NotHomomorphism { axiom: String, residual: f64 },

    #[error("Γ(i𝟙) is not a square root of −𝟙 (residual {residual:.3e})")]
    BadSquareRoot { residual: f64 },

    #[error(
        "multiplicity {value} for (source {source_block}, target {target_block}) is not an integer"
    )]
    MultiplicityNonInteger {
        source_block: usize,
        target_block: usize,
        value: f64,
    },

    #[error(
        "intertwiner space for (source {source_block}, target {target_block}) has dimension {found}, expected {expected}"
    )]
    IntertwinerRankMismatch {
        source_block: usize,
        target_block: usize,
        expected: usize,
        found: usize,
    },

    #[error("multiplicity accounting fails for target block {target_block}: Σ (p+q)·n = {got}, block dimension {expected}")]
    AccountingMismatch {
        target_block: usize,
        expected: usize,
        got: usize,
    },

    #[error("at most {max} modes supported, got {got}")]
    TooManyModes { max: usize, got: usize },

    #[error("representation violates the canonical anticommutation relations: {0}")]
    BadCar(String),

    #[error("generators span dimension {found}, full matrix algebra needs {expected}")]
    ClosureDeficient { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
