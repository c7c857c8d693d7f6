use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("quadrature did not converge: estimate {estimate} with error {error}")]
    NonConvergent { estimate: f64, error: f64 },
    #[error("non-finite integrand value at {at:?}")]
    NonFinite { at: [f64; 3] },
    #[error("finite-difference stencil at {at:?} touches the singular set")]
    StencilTouchesSingularSet { at: [f64; 3] },
    #[error("finite-difference stencil at {at:?} touches a node of the density")]
    StencilTouchesNode { at: [f64; 3] },
    #[error("gamma function pole at {x}")]
    PoleAtNonpositiveInteger { x: f64 },
    #[error("series overflow (scale {scale})")]
    Overflow { scale: f64 },
    #[error("parameter pole: {0}")]
    ParameterPole(String),
    #[error("integer b = {b} is outside the supported U regime")]
    IntegerB { b: f64 },
    #[error("catastrophic cancellation in the connection formula (ratio {ratio:e})")]
    CatastrophicCancellation { ratio: f64 },
    #[error("mu = {mu} must be an integer for this family")]
    NonIntegerMu { mu: f64 },
    #[error("parameters outside the admissible regime: {0}")]
    OutOfRegime(String),
    #[error("normalization integral diverged")]
    NormalizationDiverged,
    #[error("invalid quantum numbers: {0}")]
    InvalidQuantumNumbers(String),
    #[error("wave function vanishes at {at:?}")]
    NodeEncountered { at: [f64; 3] },
    #[error("curve passes within eps_sing of the singular set at {at:?}")]
    CurveHitsSingularSet { at: [f64; 3] },
    #[error("curve passes through a node at {at:?}")]
    NodeOnCurve { at: [f64; 3] },
    #[error("phase unwrapping exceeded the refinement cap of {cap} samples")]
    RefinementCap { cap: usize },
    #[error("pairing is sensitive to the excluded radius: spread {spread:e} vs quadrature error {quad_error:e}")]
    EpsilonScanDiverged { spread: f64, quad_error: f64 },
    #[error("extrapolation did not converge: {0}")]
    NoConvergence(String),
    #[error("inconclusive verdict: {0}")]
    Inconclusive(String),
    #[error("extension hypothesis violated: {0}")]
    ExtensionHypothesisViolated(String),
    #[error("line integral diverged")]
    LineIntegralDiverged,
    #[error("quadrature failure: {0}")]
    QuadratureFailure(String),
    #[error("norm captured {captured} below the truncation threshold")]
    TruncationTooSmall { captured: f64 },
    #[error("norm drift {drift:e} exceeds tolerance")]
    NormDrift { drift: f64 },
    #[error("boundary amplitude ratio {ratio:e} exceeds tolerance")]
    BoundaryContamination { ratio: f64 },
    #[error("bandwidth not resolved: spectral tail {tail:e}")]
    Underresolved { tail: f64 },
    #[error("density vanishes on the test support at {at:?}")]
    DensityVanishesOnSupport { at: [f64; 3] },
    #[error("local L2 probe failed for {field}: integral grew by {growth} on shrinking the exclusion radius")]
    LocalL2ProbeFailed { field: String, growth: f64 },
    #[error("candidate density is not normalizable (integral {integral})")]
    NonNormalizable { integral: f64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
