//! Minimal double-double (~31 significant digits) arithmetic.
//!
//! The shifted-basis coefficients of high-degree states span ~13 orders of
//! magnitude with alternating signs, so both the raising recurrences and
//! polynomial evaluation suffer catastrophic cancellation in plain f64
//! (condition numbers up to ~1e15 at degree 20). Carrying an error term
//! through every sum and product — the classic two-sum / two-product
//! error-free transformations — keeps those paths accurate to roughly
//! eps + cond * eps^2, i.e. full double precision for every condition
//! number met in practice.
//!
//! Only the handful of operations the crate actually needs are implemented.

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// Error-free sum: returns (s, e) with s = fl(a + b) and a + b = s + e exactly.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Fast error-free sum, valid when |a| >= |b|.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Error-free product via fused multiply-add: a * b = p + e exactly.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, x: f64) -> Dd {
        self.add(Dd::from_f64(x))
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, x: f64) -> Dd {
        let (p, e) = two_prod(self.hi, x);
        let e = e + self.lo * x;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, other: Dd) -> Dd {
        // Two Newton-style correction terms on the f64 quotient.
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q1));
        let q2 = r.hi / other.hi;
        let r = r.sub(other.mul_f64(q2));
        let q3 = r.hi / other.hi;
        let (s, e) = quick_two_sum(q1, q2);
        let (hi, lo) = quick_two_sum(s, e + q3);
        Dd { hi, lo }
    }
}

/// Evaluates `p(w) = sum c_m w^m` together with its first two derivatives in
/// `w`, carrying double-double accumulators (compensated Horner scheme).
///
/// Returns `(p(w), p'(w), p''(w))` rounded to f64. The result is accurate to
/// a few ulps of the true value even when the plain-f64 Horner recursion
/// would lose every significant digit to cancellation.
pub(crate) fn horner3_dd(coeffs: &[f64], w: f64) -> (f64, f64, f64) {
    let mut p0 = Dd::ZERO;
    let mut p1 = Dd::ZERO;
    let mut p2 = Dd::ZERO;
    for &c in coeffs.iter().rev() {
        p2 = p2.mul_f64(w).add(p1.mul_f64(2.0));
        p1 = p1.mul_f64(w).add(p0);
        p0 = p0.mul_f64(w).add_f64(c);
    }
    (p0.to_f64(), p1.to_f64(), p2.to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_tracks_lost_bits() {
        let a = Dd::from_f64(1.0);
        let tiny = 1e-25;
        let s = a.add_f64(tiny).add_f64(-1.0);
        assert!((s.to_f64() - tiny).abs() < 1e-40);
    }

    #[test]
    fn mul_is_exact_for_representable_products() {
        let a = Dd::from_f64(3.0);
        let b = Dd::from_f64(1.0 / 3.0);
        let p = a.mul(b);
        // 3 * fl(1/3) differs from 1 by the representation error of 1/3,
        // which the low word must capture.
        assert!((p.to_f64() - 1.0).abs() < 1e-16);
        assert!(p.lo != 0.0 || p.hi == 1.0);
    }

    #[test]
    fn div_round_trips() {
        let a = Dd::from_f64(std::f64::consts::PI);
        let b = Dd::from_f64(std::f64::consts::E);
        let q = a.div(b).mul(b);
        assert!((q.to_f64() - std::f64::consts::PI).abs() < 1e-15);
        assert!((q.sub(a)).to_f64().abs() < 1e-30);
    }

    #[test]
    fn horner3_matches_plain_eval_on_benign_input() {
        // p(w) = 1 + 2w + 3w^2 + 4w^3
        let c = [1.0, 2.0, 3.0, 4.0];
        let w = 0.37;
        let (p, dp, d2p) = horner3_dd(&c, w);
        let want = 1.0 + 2.0 * w + 3.0 * w * w + 4.0 * w * w * w;
        let want_d = 2.0 + 6.0 * w + 12.0 * w * w;
        let want_d2 = 6.0 + 24.0 * w;
        assert!((p - want).abs() < 1e-15);
        assert!((dp - want_d).abs() < 1e-14);
        assert!((d2p - want_d2).abs() < 1e-14);
    }

    #[test]
    fn horner3_survives_catastrophic_cancellation() {
        // (w - 1)^6 expanded and evaluated at w = 1 + 2^-7 (exactly
        // representable): the exact value is 2^-42 while the intermediate
        // terms are O(1), so plain Horner keeps only ~4 digits; the
        // compensated path reproduces the dyadic-exact answer.
        let c = [1.0, -6.0, 15.0, -20.0, 15.0, -6.0, 1.0];
        let w = 1.0 + 0.0078125;
        let (p, dp, _) = horner3_dd(&c, w);
        let exact = 0.0078125f64.powi(6);
        let exact_d = 6.0 * 0.0078125f64.powi(5);
        assert!(
            (p - exact).abs() < 1e-14 * exact,
            "compensated Horner lost the cancellation: {p:e} vs {exact:e}"
        );
        assert!((dp - exact_d).abs() < 1e-14 * exact_d);
    }
}
