use crate::lattice::LatticePoint;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension must be at least {min}, got {found}")]
    InvalidDimension { min: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("amplitude vector at {point} has length {found}, expected {expected}")]
    AmplitudeLength {
        point: LatticePoint,
        expected: usize,
        found: usize,
    },
    #[error("point {0} appears more than once")]
    DuplicatePoint(LatticePoint),
    #[error("coin is {rows}x{cols}, walk needs {expected}x{expected}")]
    CoinSize {
        rows: usize,
        cols: usize,
        expected: usize,
    },
    #[error("axis {axis} out of range for dimension {dim}")]
    InvalidAxis { axis: usize, dim: usize },
    #[error("{name} must be at least 1")]
    NonPositive { name: &'static str },
    #[error("the zero state is not admissible here")]
    ZeroState,
    #[error("state is not an eigenstate for the requested eigenvalue and shift")]
    NotEigenstate,
    #[error("chirality pair of axis {axis} vanishes on the whole line through {point}")]
    PairVanishes { axis: usize, point: LatticePoint },
    #[error("the kernel g is identically zero")]
    ZeroKernel,
    #[error("search budget of {budget} candidates exceeded after certifying sizes below {reached_size} ({scanned} candidates scanned)")]
    BudgetExceeded {
        budget: u64,
        scanned: u64,
        reached_size: usize,
    },
    #[error("solver witness failed independent verification on candidate of size {size}")]
    WitnessRejected { size: usize },
}
