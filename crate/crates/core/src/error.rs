//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpecFunError {
    #[error("gamma pole at non-positive integer x = {x}")]
    GammaPole { x: f64 },
    #[error("parameter pole: b = {b} is a non-positive integer")]
    BPole { b: f64 },
    #[error("argument out of supported range: {what} (value {value})")]
    Range { what: &'static str, value: f64 },
    #[error("invalid argument: {what}")]
    InvalidArgument { what: &'static str },
    #[error("alpha = {alpha} outside ({lo}, {hi})")]
    AlphaOutOfRange { alpha: f64, lo: f64, hi: f64 },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KernelError {
    #[error("elapsed time must be positive, got tau = {tau}")]
    NonpositiveTau { tau: f64 },
    #[error("quadrature failed to reach tolerance {requested:e}: achieved {achieved:e} ({where_})")]
    QuadratureTolerance {
        requested: f64,
        achieved: f64,
        where_: &'static str,
    },
    #[error("fixed-point iteration not contracting: sup-norm ratio {ratio}")]
    NotContracting { ratio: f64 },
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolverError {
    #[error("epsilon = {epsilon} outside (0, 1/4)")]
    EpsilonOutOfRange { epsilon: f64 },
    #[error("CFL violation: dt = {dt} exceeds stable limit {limit}")]
    CflViolation { dt: f64, limit: f64 },
    #[error("non-finite value detected at step {step} (t = {t})")]
    NumericalBlowup { step: usize, t: f64 },
    #[error("field/grid mismatch: {what}")]
    GridMismatch { what: &'static str },
    #[error("invalid configuration: {what}")]
    InvalidConfig { what: String },
    #[error("ODE integration tolerance not met: {what}")]
    OdeTolerance { what: &'static str },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BarrierError {
    #[error("super-solution inequality violated: residual {residual:e} at (y, xi) = ({y}, {xi})")]
    SuperSolutionViolated { residual: f64, y: f64, xi: f64 },
    #[error("sub-solution inequality violated: residual {residual:e} at (x, v, t) = ({x}, {v}, {t})")]
    SubSolutionViolated { residual: f64, x: f64, v: f64, t: f64 },
    #[error("barrier inequality violated at v = {v}: residual {residual:e}")]
    BarrierViolated { v: f64, residual: f64 },
    #[error("x must lie in (0, 1): got {x}")]
    WallArgument { x: f64 },
    #[error("validity region collapsed below r_max = {r_max}")]
    RegionCollapsed { r_max: f64 },
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalysisError {
    #[error("non-positive values in fit window; log-linear fit undefined")]
    NonpositiveValues,
    #[error("fit window [{lo}, {hi}] outside series range")]
    WindowOutOfRange { lo: f64, hi: f64 },
    #[error("insufficient dynamic range: {levels} usable dyadic levels (need >= 3)")]
    InsufficientRange { levels: usize },
    #[error("parameter out of range: {what}")]
    ParameterRange { what: &'static str },
    #[error("velocity truncation too small to certify tightness (B reached L = {l})")]
    TruncationTooSmall { l: f64 },
    #[error("region/grid mismatch: {what}")]
    RegionMismatch { what: &'static str },
    #[error("no snapshot recorded at t = {t}")]
    MissingSnapshot { t: f64 },
}
