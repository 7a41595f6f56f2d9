//! Tricomi's confluent hypergeometric function U(a, b, z).
//!
//! For z > 0 the function is evaluated from the Laplace-type integral
//! representation (valid for a > 0) plus the three-term recurrence in `a`
//! to reach non-positive first parameters. Assembling U from two Kummer
//! functions is avoided on this side: that combination loses e^z worth of
//! precision to cancellation. For z < 0 the connection formula is the
//! real-analytic continuation (real cube roots of z), which is the regime
//! where the two Kummer terms stay algebraically bounded.

use super::dd::DD;
use super::gamma::gamma_fn;
use super::kummer::{kummer_series_dd, SERIES_LIMIT};
use crate::error::SpecFunError;
use crate::quad::gl32;

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// U(a, b, z) for a > 0, z > 0 via
/// U = Gamma(a)^{-1} int_0^inf e^{-zt} t^{a-1} (1+t)^{b-a-1} dt.
fn tricomi_integral(a: f64, b: f64, z: f64) -> Result<f64, SpecFunError> {
    debug_assert!(a > 0.0 && z > 0.0);
    // [0, 1] with t = u^{1/a} to absorb the t^{a-1} endpoint singularity.
    let inv_a = 1.0 / a;
    let inner = |u: f64| -> f64 {
        if u <= 0.0 {
            return 0.0;
        }
        let t = u.powf(inv_a);
        (-z * t).exp() * (1.0 + t).powf(b - a - 1.0)
    };
    let mut acc = 0.0;
    // graded panels toward u = 0 where u^{1/a} still has mild curvature
    let mut lo = 0.0;
    for &hi in &[1e-6, 1e-4, 1e-2, 0.1, 0.35, 0.65, 1.0] {
        acc += gl32(&inner, lo, hi);
        lo = hi;
    }
    acc *= inv_a;
    // [1, inf): geometric panels until either the integrand is negligible
    // or the exponential factor alone guarantees a negligible tail.
    let outer = |t: f64| (-z * t).exp() * t.powf(a - 1.0) * (1.0 + t).powf(b - a - 1.0);
    let mut t_lo = 1.0;
    let scale = outer(1.0).abs().max(1e-300);
    loop {
        let t_hi = t_lo * 2.0;
        acc += gl32(&outer, t_lo, t_hi);
        if outer(t_hi).abs() * t_hi < 1e-18 * scale || z * t_hi > 250.0 {
            break;
        }
        t_lo = t_hi;
    }
    Ok(acc / gamma_fn(a)?)
}

/// Asymptotic expansion U ~ z^{-a} 2F0(a, a-b+1; -1/z), optimally truncated.
fn tricomi_asymptotic(a: f64, b: f64, z: f64) -> f64 {
    let mut term = 1.0_f64;
    let mut acc = 1.0_f64;
    let mut prev = f64::INFINITY;
    for n in 0..60 {
        let nf = n as f64;
        let next = term * (a + nf) * (a - b + 1.0 + nf) / ((nf + 1.0) * (-z));
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
    z.powf(-a) * acc
}

/// Connection formula with real-odd-root continuation for z < 0; requires
/// 3(1-b) integral so z^{1-b} stays real. Series side only, |z| <= 40.
fn tricomi_connection_neg(a: f64, b: f64, z: f64, m3: i32) -> Result<f64, SpecFunError> {
    let pi = std::f64::consts::PI;
    let c1 = if is_nonpositive_integer(1.0 + a - b) {
        0.0
    } else {
        1.0 / (gamma_fn(1.0 + a - b)? * gamma_fn(b)?)
    };
    let c2 = if is_nonpositive_integer(a) {
        0.0
    } else {
        1.0 / (gamma_fn(a)? * gamma_fn(2.0 - b)?)
    };
    let z_pow = z.cbrt().powi(m3); // z^{1-b} with the real cube root
    let m1 = if c1 != 0.0 { kummer_series_dd(a, b, z)? } else { DD::ZERO };
    let m2 = if c2 != 0.0 {
        kummer_series_dd(1.0 + a - b, 2.0 - b, z)?
    } else {
        DD::ZERO
    };
    let combo = m1.mul_f64(c1).sub(m2.mul_f64(c2 * z_pow));
    Ok(pi / (pi * b).sin() * combo.to_f64())
}

/// Same connection formula built from the algebraic asymptotic branch of M,
/// for z < -SERIES_LIMIT.
fn tricomi_connection_neg_asymptotic(
    a: f64,
    b: f64,
    z: f64,
    m3: i32,
) -> Result<f64, SpecFunError> {
    let pi = std::f64::consts::PI;
    let r = -z;
    let asym = |aa: f64, bb: f64| -> Result<f64, SpecFunError> {
        let mut term = 1.0_f64;
        let mut acc = 1.0_f64;
        let mut prev = f64::INFINITY;
        for n in 0..60 {
            let nf = n as f64;
            let next = term * (aa + nf) * (aa - bb + 1.0 + nf) / ((nf + 1.0) * r);
            if next.abs() >= prev.abs() {
                break;
            }
            prev = next;
            term = next;
            acc += term;
        }
        Ok(gamma_fn(bb)? / gamma_fn(bb - aa)? * r.powf(-aa) * acc)
    };
    let c1 = if is_nonpositive_integer(1.0 + a - b) {
        0.0
    } else {
        1.0 / (gamma_fn(1.0 + a - b)? * gamma_fn(b)?)
    };
    let c2 = if is_nonpositive_integer(a) {
        0.0
    } else {
        1.0 / (gamma_fn(a)? * gamma_fn(2.0 - b)?)
    };
    let z_pow = z.cbrt().powi(m3);
    let t1 = if c1 != 0.0 { c1 * asym(a, b)? } else { 0.0 };
    let t2 = if c2 != 0.0 { c2 * z_pow * asym(1.0 + a - b, 2.0 - b)? } else { 0.0 };
    Ok(pi / (pi * b).sin() * (t1 - t2))
}

/// U(a, b, z).
///
/// b must not be an integer (the connection formula degenerates there; the
/// profiles this crate needs use b = 2/3 and 4/3). Negative z additionally
/// requires 3(1-b) to be an integer so the continuation stays real.
pub fn tricomi_u(a: f64, b: f64, z: f64) -> Result<f64, SpecFunError> {
    if b == b.floor() {
        return Err(SpecFunError::InvalidArgument { what: "tricomi_u requires non-integer b" });
    }
    if !z.is_finite() {
        return Err(SpecFunError::InvalidArgument { what: "tricomi_u of non-finite z" });
    }
    if z == 0.0 {
        if b < 1.0 {
            return Ok(gamma_fn(1.0 - b)? / gamma_fn(1.0 + a - b)?);
        }
        return Err(SpecFunError::Range { what: "tricomi_u singular at z = 0 for b >= 1", value: z });
    }
    if z < 0.0 {
        let m3f = 3.0 * (1.0 - b);
        if (m3f - m3f.round()).abs() > 1e-9 {
            return Err(SpecFunError::InvalidArgument {
                what: "tricomi_u for z < 0 needs 3(1-b) integral (real cube-root continuation)",
            });
        }
        let m3 = m3f.round() as i32;
        return if -z <= SERIES_LIMIT {
            tricomi_connection_neg(a, b, z, m3)
        } else {
            tricomi_connection_neg_asymptotic(a, b, z, m3)
        };
    }
    if z >= SERIES_LIMIT {
        return Ok(tricomi_asymptotic(a, b, z));
    }
    if a > 0.0 {
        return tricomi_integral(a, b, z);
    }
    // Step the recurrence down from positive first parameters:
    // U(a-1) = (2a - b + z) U(a) - a (a - b + 1) U(a+1).
    let steps = (-a).floor() as usize + 1;
    let a0 = a + steps as f64;
    let mut u_hi = tricomi_integral(a0 + 1.0, b, z)?;
    let mut u_lo = tricomi_integral(a0, b, z)?;
    let mut aa = a0;
    for _ in 0..steps {
        let u_next = (2.0 * aa - b + z) * u_lo - aa * (aa - b + 1.0) * u_hi;
        u_hi = u_lo;
        u_lo = u_next;
        aa -= 1.0;
    }
    Ok(u_lo)
}
