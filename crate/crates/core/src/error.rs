use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("vortices {i} and {j} closer than collision threshold ({dist:.3e} < {threshold:.3e})")]
    Collision { i: usize, j: usize, dist: f64, threshold: f64 },
    #[error("adaptive step size underflow at t = {t:.6e} (dt = {dt:.3e})")]
    StepFailure { t: f64, dt: f64 },
    #[error("radial grid too coarse: {0} nodes (need at least 5)")]
    GridTooCoarse(usize),
    #[error("linear system is singular (pivot {pivot:.3e} at row {row})")]
    SingularSystem { row: usize, pivot: f64 },
    #[error("mode-1 right-hand side violates the kernel orthogonality condition (|<phi, G'>| = {0:.3e})")]
    OrthogonalityViolated(f64),
    #[error("quotient H/Omega0' exceeds the polynomial growth guard at r = {r:.3} (ratio {ratio:.3e})")]
    UnboundedQuotient { r: f64, ratio: f64 },
    #[error("degenerate denominator: S_11 + gamma = {0:.3e} (zero rotation rate)")]
    DegenerateDenominator(f64),
    #[error("interpolation out of range: r = {r:.3} beyond r_max = {r_max:.3}")]
    InterpolationOutOfRange { r: f64, r_max: f64 },
    #[error("mode mismatch: expected mode {expected}, got {got}")]
    ModeMismatch { expected: u32, got: u32 },
}
