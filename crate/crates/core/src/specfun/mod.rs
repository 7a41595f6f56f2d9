//! Special functions: Gamma, Kummer M, Tricomi U, and the self-similar
//! profile Lambda with its tail constant K_+.
//!
//! All evaluations are pure functions of their arguments.

pub mod dd;
mod gamma;
mod kummer;
mod profile;
mod tricomi;

pub use gamma::{gamma_fn, ln_gamma_abs};
pub use kummer::{kummer_m, kummer_m_prime, kummer_ode_residual};
pub use profile::{
    k_plus, lambda_at_zero, lambda_fd_residual, lambda_profile, AlphaParam, DEFAULT_ALPHA,
};
pub use tricomi::tricomi_u;

