//! Minimal double-double arithmetic (~31 significant digits).
//!
//! The confluent hypergeometric series below are alternating for negative
//! arguments and lose roughly 0.43*|z| digits to cancellation when summed
//! in f64. Accumulating in double-double keeps the series usable over the
//! whole |z| <= 40 window handled by the series path.

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DD {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // requires |a| >= |b|
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl DD {
    pub const ZERO: DD = DD { hi: 0.0, lo: 0.0 };
    pub const ONE: DD = DD { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from(x: f64) -> DD {
        DD { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, rhs: DD) -> DD {
        // full (non-sloppy) addition: required by the heavily cancelling
        // alternating series this type exists for
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        DD { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, rhs: f64) -> DD {
        self.add(DD::from(rhs))
    }

    #[inline]
    pub fn neg(self) -> DD {
        DD { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn sub(self, rhs: DD) -> DD {
        self.add(rhs.neg())
    }

    #[inline]
    pub fn mul(self, rhs: DD) -> DD {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = quick_two_sum(p, e);
        DD { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, rhs: f64) -> DD {
        let (p, e) = two_prod(self.hi, rhs);
        let e = e + self.lo * rhs;
        let (hi, lo) = quick_two_sum(p, e);
        DD { hi, lo }
    }

    #[inline]
    pub fn div(self, rhs: DD) -> DD {
        let q1 = self.hi / rhs.hi;
        let r = self.sub(rhs.mul_f64(q1));
        let q2 = r.hi / rhs.hi;
        let r = r.sub(rhs.mul_f64(q2));
        let q3 = r.hi / rhs.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        DD { hi, lo }.add_f64(q3)
    }

    #[inline]
    pub fn div_f64(self, rhs: f64) -> DD {
        self.div(DD::from(rhs))
    }

    #[inline]
    pub fn abs(self) -> f64 {
        self.to_f64().abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_recovers_split_product() {
        let a = DD::from(1.0).div_f64(3.0);
        let b = a.mul_f64(3.0);
        assert!((b.to_f64() - 1.0).abs() < 1e-31);
        // residual lives in the lo limb
        assert!((b.hi - 1.0).abs() < 1e-16);
    }

    #[test]
    fn alternating_sum_beats_f64() {
        // sum_{n} (-x)^n / n! = exp(-x) at x = 30: f64 loses ~13 digits
        let x = 30.0_f64;
        let mut term = DD::ONE;
        let mut acc = DD::ONE;
        for n in 1..200 {
            term = term.mul_f64(-x).div_f64(n as f64);
            acc = acc.add(term);
        }
        let exact = (-x).exp();
        assert!((acc.to_f64() - exact).abs() / exact < 1e-15);
    }
}
