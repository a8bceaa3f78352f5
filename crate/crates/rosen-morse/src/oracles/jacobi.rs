//! Three independent Jacobi-polynomial evaluation routes used to
//! cross-check the raising chain: the classical three-term recurrence, the
//! terminating hypergeometric sum, and the generalized-binomial expansion.
//!
//! None of them share code with the ladder module.

use crate::dd::Dd;
use crate::error::{CoreError, Result};
use crate::specfun::ln_gamma;

/// A recurrence or series denominator closer to zero than this is treated
/// as a breakdown rather than silently amplified.
const DEGENERACY_TOLERANCE: f64 = 1e-12;

/// Parameters of the Gauss hypergeometric series F(r, s; t; u). For a
/// bound state these are `r = b - alpha`, `s = b + alpha + 1`,
/// `t = b - a + 1`, evaluated at `u = (1 + tanh x)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeometricParams {
    pub r: f64,
    pub s: f64,
    pub t: f64,
}

impl HypergeometricParams {
    /// Validates that the series terminates (`r` a non-positive integer
    /// within tolerance) and that `t` is not a non-positive integer.
    pub fn new(r: f64, s: f64, t: f64) -> Result<Self> {
        let r_round = r.round();
        if !(r_round <= 0.0 && (r - r_round).abs() <= 1e-9) {
            return Err(CoreError::InvalidArgument {
                name: "r",
                value: r,
                reason: "series terminates only for non-positive integer r",
            });
        }
        if t <= 0.5 && (t - t.round()).abs() <= DEGENERACY_TOLERANCE {
            return Err(CoreError::InvalidArgument {
                name: "t",
                value: t,
                reason: "t must not be a non-positive integer",
            });
        }
        Ok(HypergeometricParams { r, s, t })
    }

    /// Terminating sum `sum_k (r)_k (s)_k / ((t)_k k!) u^k`, accumulated in
    /// double-double so alternating terms cancel without precision loss.
    /// The shifted factors are formed inside the double-double type too:
    /// rounding them to f64 first would seed exactly the error the wide
    /// accumulator is there to avoid.
    pub fn terminating_sum(&self, u: f64) -> Result<f64> {
        let n = (-self.r).round() as usize;
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        for k in 0..n {
            let kf = k as f64;
            if (self.t + kf).abs() <= DEGENERACY_TOLERANCE {
                return Err(CoreError::GammaDomain { x: self.t + kf });
            }
            let numer = Dd::from_f64(self.r)
                .add_f64(kf)
                .mul(Dd::from_f64(self.s).add_f64(kf))
                .mul_f64(u);
            let denom = Dd::from_f64(self.t).add_f64(kf).mul_f64(kf + 1.0);
            term = term.mul(numer).div(denom);
            sum = sum.add(term);
        }
        Ok(sum.to_f64())
    }
}

/// `P_n^{(A,B)}(v)` by upward three-term recurrence from
/// `P_0 = 1`, `P_1 = ((A+B+2)v + A-B)/2`.
///
/// # Errors
/// [`CoreError::DegenerateRecurrence`] when `2k + A + B` or `k + A + B + 1`
/// vanishes for an intermediate `k < n` (the classical breakdown cases).
pub fn jacobi_three_term(a: f64, b: f64, n: usize, v: f64) -> Result<f64> {
    let mut prev = 1.0;
    if n == 0 {
        return Ok(prev);
    }
    let mut curr = 0.5 * ((a + b + 2.0) * v + a - b);
    for k in 1..n {
        let kf = k as f64;
        let (c0, c1, c2, c3) = recurrence_scalars(a, b, kf)?;
        let next = ((c1 * v + c2) * curr - c3 * prev) / c0;
        prev = curr;
        curr = next;
    }
    Ok(curr)
}

/// Same recurrence applied to whole coefficient vectors in the shifted
/// basis (powers of `1 - v`), so the chain output can be compared
/// coefficient by coefficient, not just pointwise.
pub fn jacobi_three_term_coeffs(a: f64, b: f64, n: usize) -> Result<Vec<f64>> {
    let mut prev = vec![1.0];
    if n == 0 {
        return Ok(prev);
    }
    // P_1 in the shifted basis: (A+1) - (A+B+2)/2 * (1 - v).
    let mut curr = vec![a + 1.0, -0.5 * (a + b + 2.0)];
    for k in 1..n {
        let kf = k as f64;
        let (c0, c1, c2, c3) = recurrence_scalars(a, b, kf)?;
        // v * q(w) with w = 1 - v has coefficients q_m - q_{m-1}.
        let mut next = vec![0.0; k + 2];
        for (m, slot) in next.iter_mut().enumerate() {
            let qm = curr.get(m).copied().unwrap_or(0.0);
            let qm1 = if m >= 1 { curr[m - 1] } else { 0.0 };
            let pm = prev.get(m).copied().unwrap_or(0.0);
            *slot = (c1 * (qm - qm1) + c2 * qm - c3 * pm) / c0;
        }
        prev = curr;
        curr = next;
    }
    Ok(curr)
}

/// Scalars of the classical recurrence
/// `c0 P_{k+1} = (c1 v + c2) P_k - c3 P_{k-1}`.
fn recurrence_scalars(a: f64, b: f64, kf: f64) -> Result<(f64, f64, f64, f64)> {
    let two_k = 2.0 * kf + a + b;
    let k_one = kf + a + b + 1.0;
    if two_k.abs() <= DEGENERACY_TOLERANCE {
        return Err(CoreError::DegenerateRecurrence {
            k: kf as usize,
            value: two_k,
        });
    }
    if k_one.abs() <= DEGENERACY_TOLERANCE {
        return Err(CoreError::DegenerateRecurrence {
            k: kf as usize,
            value: k_one,
        });
    }
    let c0 = 2.0 * (kf + 1.0) * k_one * two_k;
    let c1 = (two_k + 1.0) * two_k * (two_k + 2.0);
    let c2 = (two_k + 1.0) * (a * a - b * b);
    let c3 = 2.0 * (kf + a) * (kf + b) * (two_k + 2.0);
    Ok((c0, c1, c2, c3))
}

/// `P_n^{(A,B)}(v)` via the terminating hypergeometric definition
/// `binom(A+n, n) F(-n, n+A+B+1; A+1; (1-v)/2)`.
///
/// For `v < 0` the mirror identity `P_n^{(A,B)}(v) = (-1)^n P_n^{(B,A)}(-v)`
/// keeps the series argument small so the alternating sum stays
/// well conditioned.
///
/// # Errors
/// [`CoreError::InvalidArgument`] for `A <= -1`; [`CoreError::GammaDomain`]
/// if a denominator pole is hit before termination.
pub fn jacobi_hypergeometric(a: f64, b: f64, n: usize, v: f64) -> Result<f64> {
    if v < 0.0 {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        return Ok(sign * jacobi_hypergeometric(b, a, n, -v)?);
    }
    if a <= -1.0 {
        return Err(CoreError::InvalidArgument {
            name: "a",
            value: a,
            reason: "first Jacobi parameter must exceed -1",
        });
    }
    let nf = n as f64;
    let hp = HypergeometricParams::new(-nf, nf + a + b + 1.0, a + 1.0)?;
    let prefactor = (ln_gamma(nf + a + 1.0)? - ln_gamma(nf + 1.0)? - ln_gamma(a + 1.0)?).exp();
    Ok(prefactor * hp.terminating_sum(0.5 * (1.0 - v))?)
}

/// Generalized binomial evaluated in double-double: exact factors
/// `(x - j)/(j + 1)` accumulated without intermediate rounding.
fn binomial_dd(x: f64, k: usize) -> Dd {
    let mut acc = Dd::ONE;
    for j in 0..k {
        let jf = j as f64;
        acc = acc.mul_f64(x - jf).div(Dd::from_f64(jf + 1.0));
    }
    acc
}

/// `P_n^{(alpha_gf - n, beta_gf - n)}(v)` by the expansion
/// `2^{-n} sum_m binom(alpha_gf, m) binom(beta_gf, n-m) (v-1)^{n-m} (v+1)^m`.
///
/// The parameters are the generating-function exponents, not the Jacobi
/// pair: to evaluate `P_n^{(A,B)}` pass `alpha_gf = A + n`, `beta_gf = B + n`.
pub fn jacobi_binomial_expansion(alpha_gf: f64, beta_gf: f64, n: usize, v: f64) -> f64 {
    let vm = Dd::from_f64(v).add_f64(-1.0);
    let vp = Dd::from_f64(v).add_f64(1.0);
    let mut sum = Dd::ZERO;
    for m in 0..=n {
        let mut term = binomial_dd(alpha_gf, m).mul(binomial_dd(beta_gf, n - m));
        for _ in 0..n - m {
            term = term.mul(vm);
        }
        for _ in 0..m {
            term = term.mul(vp);
        }
        sum = sum.add(term);
    }
    sum.mul_f64(0.5f64.powi(n as i32)).to_f64()
}
