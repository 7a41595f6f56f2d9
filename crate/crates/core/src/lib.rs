//! Numerical laboratory for the kinetic Fokker-Planck equation
//! `f_t + v f_x = f_vv` on the strip `[0,1] x R` with absorbing walls:
//! particles that reach `x = 0` or `x = 1` leave and never re-enter.
//!
//! The crate bundles
//! - deterministic grid solvers (an upwind finite-volume scheme and a
//!   regularized semi-Lagrangian scheme with a velocity-jump collision
//!   operator),
//! - a Langevin Monte Carlo oracle for the same dynamics,
//! - the whole-space fundamental solution with its boundary-limit
//!   identity and boundary-layer density,
//! - steady/self-similar comparison functions built from confluent
//!   hypergeometric functions, and
//! - an analysis toolkit measuring decay rates, Hölder exponents near the
//!   singular corners `(0,0)` and `(1,0)`, and the bookkeeping behind the
//!   exponential mass-decay argument.

pub mod analysis;
pub mod barriers;
pub mod error;
pub mod grid;
pub mod kernel;
pub mod mc;
pub mod quad;
pub mod solver;
pub mod specfun;

pub use error::{AnalysisError, BarrierError, KernelError, SolverError, SpecFunError};
pub use grid::{Grid1d, PhaseField, PhaseGrid};
