use thiserror::Error;

pub type Result<T> = std::result::Result<T, ModelError>;

/// Failure modes of the numerical model.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate polariton mode at k = {k:e}: zero coupling and zero detuning")]
    DegenerateMode { k: f64 },

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("ambiguous solution, candidate brackets: {candidates:?}")]
    Ambiguous { candidates: Vec<(f64, f64)> },

    #[error(
        "pump occupation did not converge after {iterations} iterations; fixed-point brackets {brackets:?}"
    )]
    Bistability {
        iterations: usize,
        brackets: Vec<(f64, f64)>,
    },

    #[error("singular steady state (pole) at drive energy {energy:e} eV")]
    Pole { energy: f64 },

    #[error("Bogoliubov transformation undefined: (E_a~ - E)^2 = {gap2:e} <= V^2 = {v2:e}")]
    Instability { gap2: f64, v2: f64 },

    #[error("drive above renormalized dark level (E_a~ - E = {detuning:e} eV < 0)")]
    SignRegime { detuning: f64 },

    #[error("time step {dt:e} exceeds stability limit {limit:e} (units of hbar/eV)")]
    StepSize { dt: f64, limit: f64 },

    #[error("sector dimension {dim} exceeds limit {limit}")]
    SectorTooLarge { dim: usize, limit: usize },
}
