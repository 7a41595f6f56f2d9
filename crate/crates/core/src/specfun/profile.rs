//! The self-similar profile Lambda and its admissible exponent.
//!
//! Lambda solves Lambda'' + 3 zeta^2 Lambda' - 9 alpha zeta Lambda = 0 and
//! is assembled from two Kummer functions of argument -zeta^3. The two
//! terms are exponentially large for zeta << 0, so the representation is
//! only evaluated directly while |zeta|^3 <= 40 (in double-double); beyond
//! that the algebraic asymptotic branch takes over on both sides:
//! Lambda ~ |zeta|^{3 alpha} as zeta -> -inf and ~ K_+ |zeta|^{3 alpha}
//! as zeta -> +inf.

use super::gamma::gamma_fn;
use super::kummer::{kummer_series_dd, SERIES_LIMIT};
use crate::error::SpecFunError;

/// Similarity exponent. Two admissible windows exist: (0, 1/6) for the
/// regular profile and small negative values for the singular steady
/// solutions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaParam(f64);

impl AlphaParam {
    /// Exponent for the regular profile; requires 0 < alpha < 1/6.
    pub fn regular(alpha: f64) -> Result<AlphaParam, SpecFunError> {
        if alpha > 0.0 && alpha < 1.0 / 6.0 {
            Ok(AlphaParam(alpha))
        } else {
            Err(SpecFunError::AlphaOutOfRange { alpha, lo: 0.0, hi: 1.0 / 6.0 })
        }
    }

    /// Exponent for the singular steady solutions; requires small alpha < 0.
    pub fn singular(alpha: f64) -> Result<AlphaParam, SpecFunError> {
        if alpha < 0.0 && alpha > -1.0 / 6.0 {
            Ok(AlphaParam(alpha))
        } else {
            Err(SpecFunError::AlphaOutOfRange { alpha, lo: -1.0 / 6.0, hi: 0.0 })
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }
}

/// Default exponent used across the crate: interior of (0, 1/6).
pub const DEFAULT_ALPHA: f64 = 0.1;

/// K_+ = 2 cos(pi (alpha + 1/3)), the amplitude ratio of the two tails of
/// Lambda. Strictly positive on the admissible range and 0 at alpha = 1/6.
pub fn k_plus(alpha: AlphaParam) -> f64 {
    2.0 * (std::f64::consts::PI * (alpha.value() + 1.0 / 3.0)).cos()
}

/// Common tail series sum_n (-a)_n (1/3 - a)_n / (n! x^n) at x = zeta^3,
/// optimally truncated. Shared by both tails.
fn tail_series(alpha: f64, zeta3: f64) -> f64 {
    let mut term = 1.0_f64;
    let mut acc = 1.0_f64;
    let mut prev = f64::INFINITY;
    for n in 0..60 {
        let nf = n as f64;
        let next = term * (-alpha + nf) * (1.0 / 3.0 - alpha + nf) / ((nf + 1.0) * zeta3);
        if next.abs() >= prev.abs() {
            break;
        }
        prev = next;
        term = next;
        acc += term;
        if term.abs() < 1e-17 * acc.abs() {
            break;
        }
    }
    acc
}

/// Lambda(zeta) for a regular exponent; strictly positive on all of R.
pub fn lambda_profile(alpha: AlphaParam, zeta: f64) -> Result<f64, SpecFunError> {
    let a = alpha.value();
    let z3 = zeta * zeta * zeta;
    if z3.abs() <= SERIES_LIMIT {
        let pi = std::f64::consts::PI;
        let c1 = 1.0 / (gamma_fn(1.0 / 3.0 - a)? * gamma_fn(2.0 / 3.0)?);
        let c2 = 1.0 / (gamma_fn(-a)? * gamma_fn(4.0 / 3.0)?);
        let m1 = kummer_series_dd(-a, 2.0 / 3.0, -z3)?;
        let m2 = kummer_series_dd(1.0 / 3.0 - a, 4.0 / 3.0, -z3)?;
        let combo = m1.mul_f64(c1).add(m2.mul_f64(c2 * zeta));
        return Ok(pi / (2.0 * pi / 3.0).sin() * combo.to_f64());
    }
    let amplitude = if zeta > 0.0 { k_plus(alpha) } else { 1.0 };
    Ok(amplitude * zeta.abs().powf(3.0 * a) * tail_series(a, z3))
}

/// Centered finite-difference residual of the profile ODE
/// Lambda'' + 3 zeta^2 Lambda' - 9 alpha zeta Lambda at step h.
pub fn lambda_fd_residual(alpha: AlphaParam, zeta: f64, h: f64) -> Result<f64, SpecFunError> {
    let lm = lambda_profile(alpha, zeta - h)?;
    let l0 = lambda_profile(alpha, zeta)?;
    let lp = lambda_profile(alpha, zeta + h)?;
    let d2 = (lp - 2.0 * l0 + lm) / (h * h);
    let d1 = (lp - lm) / (2.0 * h);
    Ok(d2 + 3.0 * zeta * zeta * d1 - 9.0 * alpha.value() * zeta * l0)
}

/// Lambda(0) in closed form: pi / (sin(2 pi / 3) Gamma(1/3 - alpha) Gamma(2/3)).
pub fn lambda_at_zero(alpha: AlphaParam) -> Result<f64, SpecFunError> {
    let pi = std::f64::consts::PI;
    Ok(pi
        / ((2.0 * pi / 3.0).sin()
            * gamma_fn(1.0 / 3.0 - alpha.value())?
            * gamma_fn(2.0 / 3.0)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::tricomi_u;
    use approx::assert_relative_eq;

    fn alpha01() -> AlphaParam {
        AlphaParam::regular(0.1).unwrap()
    }

    #[test]
    fn alpha_windows_enforced() {
        assert!(AlphaParam::regular(0.1).is_ok());
        assert!(AlphaParam::regular(1.0 / 6.0).is_err());
        assert!(AlphaParam::regular(0.0).is_err());
        assert!(AlphaParam::singular(-0.05).is_ok());
        assert!(AlphaParam::singular(0.05).is_err());
    }

    #[test]
    fn value_at_zero_closed_form() {
        let a = alpha01();
        let want = lambda_at_zero(a).unwrap();
        assert_relative_eq!(lambda_profile(a, 0.0).unwrap(), want, max_relative = 1e-14);
        // 40-digit reference
        assert_relative_eq!(want, 0.686_909_333_001_261_7, max_relative = 1e-13);
    }

    #[test]
    fn matches_high_precision_references() {
        let a = alpha01();
        for &(zeta, want) in &[
            (1.0, 0.439_710_729_371_428_01),
            (-2.0, 1.234_520_837_187_245_7),
            (3.0, 0.577_645_823_320_066_53),
            (-3.3, 1.431_633_591_808_241_3),
            (3.3, 0.594_533_696_365_051_2),
            (10.0, 0.829_657_353_177_188_27),
            (-10.0, 1.995_308_845_287_377_2),
            (-50.0, 3.233_635_636_495_979_8),
        ] {
            assert_relative_eq!(
                lambda_profile(a, zeta).unwrap(),
                want,
                max_relative = 1e-11
            );
        }
    }

    #[test]
    fn k_plus_closed_form() {
        assert_relative_eq!(
            k_plus(alpha01()),
            2.0 * (13.0 * std::f64::consts::PI / 30.0).cos(),
            max_relative = 1e-15
        );
        assert_relative_eq!(k_plus(alpha01()), 0.415_823_381_635_518_7, max_relative = 1e-13);
        // limits of the closed form
        assert_relative_eq!(
            k_plus(AlphaParam::regular(1e-9).unwrap()),
            1.0,
            max_relative = 1e-7
        );
        assert!(k_plus(AlphaParam::regular(1.0 / 6.0 - 1e-9).unwrap()) < 1e-7);
    }

    #[test]
    fn tails_match_power_laws() {
        let a = alpha01();
        let kp = k_plus(a);
        let l_neg = lambda_profile(a, -50.0).unwrap();
        assert_relative_eq!(l_neg / 50.0_f64.powf(0.3), 1.0, max_relative = 2e-2);
        let l_pos = lambda_profile(a, 50.0).unwrap();
        assert_relative_eq!(l_pos / (kp * 50.0_f64.powf(0.3)), 1.0, max_relative = 2e-2);
    }

    #[test]
    fn u_assembly_reproduces_lambda() {
        // Lambda(zeta) = U(-alpha, 2/3, -zeta^3); the Tricomi path goes
        // through the Laplace integral for zeta < 0, an independent route.
        let a = alpha01();
        let mut zeta = -3.4;
        while zeta <= 3.4 {
            let via_u = tricomi_u(-0.1, 2.0 / 3.0, -zeta * zeta * zeta).unwrap();
            let direct = lambda_profile(a, zeta).unwrap();
            assert!(
                (via_u - direct).abs() <= 1e-10 * direct.abs().max(1.0),
                "mismatch at zeta = {zeta}: {via_u} vs {direct}"
            );
            zeta += 0.17;
        }
    }

    #[test]
    fn positivity_on_wide_range() {
        for &al in &[0.05, 0.10, 0.15] {
            let a = AlphaParam::regular(al).unwrap();
            let mut zeta = -50.0;
            while zeta <= 50.0 {
                let v = lambda_profile(a, zeta).unwrap();
                assert!(v > 0.0, "Lambda({zeta}; {al}) = {v} not positive");
                zeta += 0.05;
            }
        }
    }

    #[test]
    fn ode_residual_small() {
        let a = alpha01();
        let h = 2e-3;
        let mut zeta = -10.0;
        while zeta <= 10.0 {
            let r = lambda_fd_residual(a, zeta, h).unwrap();
            assert!(r.abs() < 1e-6, "residual {r:e} at zeta = {zeta}");
            zeta += 0.25;
        }
    }
}
