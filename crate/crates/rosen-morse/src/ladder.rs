//! Coefficient-level raising operators.
//!
//! Two recurrences produce the polynomial factor of state `n + 1` from state
//! `n`:
//!
//! * the symmetric (`beta = 0`) recurrence acts on tanh-basis coefficients
//!   `a_{mn}` with the normalization folded in ([`raise_symmetric`]);
//! * the general recurrence acts on shifted-basis coefficients `c_m` of
//!   `sum c_m (1 - v)^m` in two steps: a linear degree-raising map
//!   ([`apply_recjac`]) that lowers both Jacobi parameters by one, then a
//!   coefficientwise gamma-ratio rescaling ([`weyl_shift`]) that shifts the
//!   parameters by a fractional order `nu` — the coefficient realization of
//!   a Weyl fractional integral. [`raise_general`] composes the two.

use crate::dd::Dd;
use crate::error::{CoreError, Result};
use crate::spectrum::{
    count_bound_states, exponents, jacobi_params, JacobiParams, PotentialParams,
};
use crate::specfun::{generalized_binomial, ln_gamma};

/// Tolerance for the `n + 1 < alpha` bound check in the symmetric raise.
const BOUND_TOLERANCE: f64 = 1e-12;

/// Polynomial in the shifted basis: `sum_m c_m (1 - v)^m` with `v = tanh x`,
/// carrying the Jacobi parameters it was built for.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftedPolynomial {
    /// Jacobi parameter pair (A, B) of the represented polynomial.
    pub params: JacobiParams,
    /// Polynomial degree; `coeffs` has exactly `degree + 1` entries.
    pub degree: usize,
    /// Coefficients c_0 ... c_degree.
    pub coeffs: Vec<f64>,
}

impl ShiftedPolynomial {
    /// Wraps a coefficient vector; the degree is `coeffs.len() - 1`.
    ///
    /// # Errors
    /// [`CoreError::InvalidArgument`] for an empty vector or a zero leading
    /// coefficient at degree >= 1.
    pub fn new(params: JacobiParams, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(CoreError::InvalidArgument {
                name: "coeffs",
                value: 0.0,
                reason: "must contain at least one coefficient",
            });
        }
        let degree = coeffs.len() - 1;
        if degree >= 1 && coeffs[degree] == 0.0 {
            return Err(CoreError::InvalidArgument {
                name: "coeffs",
                value: 0.0,
                reason: "leading coefficient must be nonzero",
            });
        }
        Ok(ShiftedPolynomial {
            params,
            degree,
            coeffs,
        })
    }

    /// The constant polynomial 1 (ground-state polynomial factor).
    pub fn one(params: JacobiParams) -> Self {
        ShiftedPolynomial {
            params,
            degree: 0,
            coeffs: vec![1.0],
        }
    }

    /// Plain-Horner evaluation at `v` (diagnostic-grade; wave-function
    /// evaluation uses a compensated scheme internally).
    pub fn eval(&self, v: f64) -> f64 {
        let w = 1.0 - v;
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * w + c)
    }
}

/// Symmetric-case state polynomial: `sum_m a_{mn} v^m` with the
/// normalization constant folded into the coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct TanhPolynomial {
    /// Well-depth parameter the chain was built for.
    pub alpha: f64,
    /// State index; `coeffs` has `n + 1` entries.
    pub n: usize,
    /// Coefficients a_{0n} ... a_{nn}; entries with index parity opposite
    /// to `n` are exactly zero.
    pub coeffs: Vec<f64>,
}

/// Fractional order of the Jacobi-parameter shift performed by one raising
/// step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeylOrder {
    pub nu: f64,
}

impl WeylOrder {
    /// Order used when raising state `n` to `n + 1`:
    /// `nu = beta / ((alpha - n - 1)(alpha - n))`.
    ///
    /// # Errors
    /// [`CoreError::UnboundState`] if state `n + 1` is not bound.
    pub fn for_step(p: &PotentialParams, n: usize) -> Result<Self> {
        if n + 1 >= count_bound_states(p) {
            return Err(CoreError::UnboundState {
                n: n + 1,
                limit: p.alpha - p.beta.abs().sqrt(),
            });
        }
        let nf = n as f64;
        Ok(WeylOrder {
            nu: p.beta / ((p.alpha - nf - 1.0) * (p.alpha - nf)),
        })
    }
}

/// Ground-state tanh polynomial `[a_00]` with
/// `a_00 = 2^{-alpha} sqrt(alpha Gamma(2 alpha + 1)) / Gamma(alpha + 1)`.
pub fn seed_symmetric(alpha: f64) -> Result<TanhPolynomial> {
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(CoreError::InvalidArgument {
            name: "alpha",
            value: alpha,
            reason: "must be finite and positive",
        });
    }
    let ln_a00 = -alpha * std::f64::consts::LN_2
        + 0.5 * (alpha.ln() + ln_gamma(2.0 * alpha + 1.0)?)
        - ln_gamma(alpha + 1.0)?;
    Ok(TanhPolynomial {
        alpha,
        n: 0,
        coeffs: vec![ln_a00.exp()],
    })
}

/// One symmetric raising step:
/// `a_{m,n+1} = sqrt((alpha-n-1) / ((n+1)(2 alpha - n)(alpha - n)))
///  * [(2 alpha - 2n + m - 1) a_{m-1,n} - (m + 1) a_{m+1,n}]`.
///
/// Entries whose index parity differs from `n + 1` stay exactly zero.
///
/// # Errors
/// [`CoreError::UnboundState`] if `n + 1 >= alpha` (within tolerance).
pub fn raise_symmetric(t: &TanhPolynomial) -> Result<TanhPolynomial> {
    let alpha = t.alpha;
    let n = t.n;
    let next = n as f64 + 1.0;
    if next >= alpha - BOUND_TOLERANCE {
        return Err(CoreError::UnboundState {
            n: n + 1,
            limit: alpha,
        });
    }
    let nf = n as f64;
    let factor = ((alpha - nf - 1.0) / ((nf + 1.0) * (2.0 * alpha - nf) * (alpha - nf))).sqrt();
    let get = |m: isize| -> f64 {
        if m < 0 || m as usize > n {
            0.0
        } else {
            t.coeffs[m as usize]
        }
    };
    let coeffs = (0..=n + 1)
        .map(|m| {
            let mf = m as f64;
            factor * ((2.0 * alpha - 2.0 * nf + mf - 1.0) * get(m as isize - 1)
                - (mf + 1.0) * get(m as isize + 1))
        })
        .collect();
    Ok(TanhPolynomial {
        alpha,
        n: n + 1,
        coeffs,
    })
}

/// Degree-raising linear map on shifted-basis coefficients:
/// `2 (n + 1) b_m = -(A + B + m - 1) a_{m-1} + 2 (A + m) a_m`.
///
/// Takes the degree-`n` polynomial with parameters `(A, B)` to the
/// degree-`n+1` polynomial with parameters `(A - 1, B - 1)`.
pub fn apply_recjac(a: &ShiftedPolynomial) -> ShiftedPolynomial {
    let big_a = a.params.a;
    let big_b = a.params.b;
    let n = a.degree;
    let denom = 2.0 * (n as f64 + 1.0);
    let get = |m: isize| -> f64 {
        if m < 0 || m as usize > n {
            0.0
        } else {
            a.coeffs[m as usize]
        }
    };
    let coeffs = (0..=n + 1)
        .map(|m| {
            let mf = m as f64;
            (-(big_a + big_b + mf - 1.0) * get(m as isize - 1)
                + 2.0 * (big_a + mf) * get(m as isize))
                / denom
        })
        .collect();
    ShiftedPolynomial {
        params: JacobiParams {
            a: big_a - 1.0,
            b: big_b - 1.0,
        },
        degree: n + 1,
        coeffs,
    }
}

/// Coefficientwise gamma-ratio rescaling that shifts the Jacobi parameters
/// by `(+nu, -nu)`:
/// `c_m = Gamma(abar + nu + n + 1) Gamma(abar + m)
///        / (Gamma(abar + n + 1) Gamma(abar + m + nu)) * b_m`,
/// where `abar = A + 1` is the first parameter of the pre-raise state and
/// `n = degree - 1` its index. Each ratio is evaluated once in log space.
///
/// The leading coefficient is preserved exactly (its ratio is 1), so the
/// degree never changes.
///
/// # Errors
/// [`CoreError::GammaDomain`] if any gamma argument is non-positive, which
/// can happen for strongly negative `nu`.
pub fn weyl_shift(b: &ShiftedPolynomial, w: WeylOrder) -> Result<ShiftedPolynomial> {
    let abar = b.params.a + 1.0;
    let abar_nu = abar + w.nu;
    let deg = b.degree as f64;
    // ln Gamma(abar + nu + n + 1) - ln Gamma(abar + n + 1) with n = deg - 1.
    let ln_lead = ln_gamma(abar_nu + deg)? - ln_gamma(abar + deg)?;
    let mut coeffs = Vec::with_capacity(b.degree + 1);
    for (m, &bm) in b.coeffs.iter().enumerate() {
        let mf = m as f64;
        let ratio = (ln_lead + ln_gamma(abar + mf)? - ln_gamma(abar_nu + mf)?).exp();
        coeffs.push(ratio * bm);
    }
    Ok(ShiftedPolynomial {
        params: JacobiParams {
            a: b.params.a + w.nu,
            b: b.params.b - w.nu,
        },
        degree: b.degree,
        coeffs,
    })
}

/// Re-expands the polynomial around the opposite endpoint: returns the
/// coefficients of `(-1)^n P(-v)` in the shifted basis, which is the same
/// polynomial family with parameters swapped. Applying it twice is the
/// identity (up to rounding).
pub fn reflect(c: &ShiftedPolynomial) -> ShiftedPolynomial {
    let n = c.degree;
    let sign_n = if n % 2 == 0 { 1.0 } else { -1.0 };
    let mut coeffs = vec![0.0; n + 1];
    for (k, out) in coeffs.iter_mut().enumerate() {
        let mut acc = 0.0;
        // binom(m, k) * 2^{m-k}, accumulated upward in m.
        let mut weight = 1.0;
        for m in k..=n {
            acc += c.coeffs[m] * weight;
            weight *= 2.0 * (m as f64 + 1.0) / (m as f64 + 1.0 - k as f64);
        }
        let sign_k = if k % 2 == 0 { 1.0 } else { -1.0 };
        *out = sign_n * sign_k * acc;
    }
    ShiftedPolynomial {
        params: c.params.swapped(),
        degree: n,
        coeffs,
    }
}

/// Full raising step for the general potential: state `n` to state `n + 1`
/// via [`apply_recjac`] followed by [`weyl_shift`] with
/// `nu = beta / ((alpha - n - 1)(alpha - n))`.
///
/// For `beta < 0` the step runs on the reflected (`beta -> |beta|`) problem
/// and reflects back, keeping all gamma arguments positive.
///
/// # Errors
/// [`CoreError::InvalidArgument`] if `c.degree != n`;
/// [`CoreError::UnboundState`] / [`CoreError::ThresholdState`] if state
/// `n + 1` is unbound or unnormalizable.
pub fn raise_general(
    c: &ShiftedPolynomial,
    p: &PotentialParams,
    n: usize,
) -> Result<ShiftedPolynomial> {
    if c.degree != n {
        return Err(CoreError::InvalidArgument {
            name: "n",
            value: n as f64,
            reason: "polynomial degree must equal the state index",
        });
    }
    // Threshold and bound checks for the target state.
    let target = exponents(p, n + 1)?;
    let target_params = jacobi_params(&target)?;

    if p.beta < 0.0 {
        let raised = raise_general(&reflect(c), &p.reflected(), n)?;
        let mut back = reflect(&raised);
        back.params = target_params;
        return Ok(back);
    }

    let order = WeylOrder::for_step(p, n)?;
    let mut raised = weyl_shift(&apply_recjac(c), order)?;
    // The shift arithmetic lands on (A_n - 1 + nu, B_n - 1 - nu), which is
    // algebraically the parameter pair of state n + 1; snap to the closed
    // form so downstream consistency checks see the exact same floats.
    raised.params = target_params;
    Ok(raised)
}

/// Re-expands `sum c_m (1 - v)^m` into monomial coefficients in `v`
/// (index k holds the `v^k` coefficient).
pub fn convert_basis(c: &ShiftedPolynomial) -> Vec<f64> {
    let n = c.degree;
    let mut out = vec![0.0; n + 1];
    for (k, slot) in out.iter_mut().enumerate() {
        let mut acc = 0.0;
        for m in k..=n {
            acc += c.coeffs[m] * generalized_binomial(m as f64, k);
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        *slot = sign * acc;
    }
    out
}

/// Runs the whole raising chain `0 -> n` with double-double internal
/// arithmetic and rounds once at the end, so the returned coefficients are
/// correctly rounded values of the exact chain.
///
/// The gamma-ratio of the shift step telescopes into the finite product
/// `prod_{j=m}^{n} (abar + nu + j) / (abar + j)`, so the whole chain is
/// rational in `(alpha, beta)` and needs no transcendental evaluations.
pub(crate) fn chain_coefficients(p: &PotentialParams, n: usize) -> Result<Vec<f64>> {
    // Bound and threshold guards for the final state (intermediate states
    // sit further from the threshold since alpha - k decreases with k).
    let e = exponents(p, n)?;
    jacobi_params(&e)?;

    let alpha = Dd::from_f64(p.alpha);
    let beta = Dd::from_f64(p.beta);
    let mut coeffs = vec![Dd::ONE];
    for k in 0..n {
        let kf = k as f64;
        let bk = alpha.add_f64(-kf); // alpha - k
        let bk1 = alpha.add_f64(-kf - 1.0); // alpha - k - 1
        let ratio = beta.div(bk);
        let abar = bk.add(ratio);
        let bbar = bk.sub(ratio);
        let nu = beta.div(bk1.mul(bk));

        // Degree-raising map (eq. "recjac" analogue in double-double).
        let denom = Dd::from_f64(2.0 * (kf + 1.0));
        let mut next = Vec::with_capacity(k + 2);
        for m in 0..=k + 1 {
            let mf = m as f64;
            let prev = if m >= 1 { coeffs[m - 1] } else { Dd::ZERO };
            let curr = if m <= k { coeffs[m] } else { Dd::ZERO };
            let t1 = abar.add(bbar).add_f64(mf - 1.0).neg().mul(prev);
            let t2 = abar.add_f64(mf).mul_f64(2.0).mul(curr);
            next.push(t1.add(t2).div(denom));
        }

        // Parameter-shift rescaling: the gamma ratio reduced to the finite
        // product prod_{j=m}^{k} (abar + nu + j)/(abar + j); the factor for
        // m = k + 1 is the empty product 1, preserving the leading term.
        let abar_nu = abar.add(nu);
        for (m, cm) in next.iter_mut().enumerate().take(k + 1) {
            let mut factor = Dd::ONE;
            for j in m..=k {
                let jf = j as f64;
                factor = factor.mul(abar_nu.add_f64(jf)).div(abar.add_f64(jf));
            }
            *cm = cm.mul(factor);
        }
        coeffs = next;
    }
    Ok(coeffs.into_iter().map(Dd::to_f64).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn params(alpha: f64, beta: f64) -> PotentialParams {
        PotentialParams::new(alpha, beta).unwrap()
    }

    fn rel_err(got: f64, want: f64) -> f64 {
        (got - want).abs() / want.abs().max(1e-300)
    }

    fn state_poly(p: &PotentialParams, n: usize) -> ShiftedPolynomial {
        let jp0 = jacobi_params(&exponents(p, 0).unwrap()).unwrap();
        let mut poly = ShiftedPolynomial::one(jp0);
        for k in 0..n {
            poly = raise_general(&poly, p, k).unwrap();
        }
        poly
    }

    #[test]
    fn seed_values() {
        assert!(rel_err(
            seed_symmetric(1.0).unwrap().coeffs[0],
            std::f64::consts::FRAC_1_SQRT_2
        ) < 1e-13);
        assert!(rel_err(
            seed_symmetric(2.0).unwrap().coeffs[0],
            0.866_025_403_784_438_6
        ) < 1e-13);
        assert!(rel_err(
            seed_symmetric(5.5).unwrap().coeffs[0],
            1.137_299_299_322_256_4
        ) < 1e-13);
        assert!(seed_symmetric(0.0).is_err());
    }

    #[test]
    fn symmetric_raise_examples() {
        let t1 = raise_symmetric(&seed_symmetric(2.0).unwrap()).unwrap();
        assert_eq!(t1.coeffs[0], 0.0);
        assert!(rel_err(t1.coeffs[1], 1.224_744_871_391_589) < 1e-13);

        // One-step hand evaluation at alpha = 3:
        // a_{1,1} = sqrt(2/(1*6*3)) * 6 * a_00.
        let t1 = raise_symmetric(&seed_symmetric(3.0).unwrap()).unwrap();
        assert!(rel_err(t1.coeffs[1], 1.936_491_673_103_708_5) < 1e-13);

        let mut t = seed_symmetric(5.5).unwrap();
        t = raise_symmetric(&t).unwrap();
        t = raise_symmetric(&t).unwrap();
        assert!(rel_err(t.coeffs[0], -0.672_835_339_205_376) < 1e-12);
        assert_eq!(t.coeffs[1], 0.0);
        assert!(rel_err(t.coeffs[2], 6.728_353_392_053_76) < 1e-12);
    }

    #[test]
    fn symmetric_raise_parity_and_bounds() {
        let mut t = seed_symmetric(5.5).unwrap();
        for _ in 0..4 {
            t = raise_symmetric(&t).unwrap();
            for (m, &c) in t.coeffs.iter().enumerate() {
                if m % 2 != t.n % 2 {
                    assert_eq!(c, 0.0, "parity zero violated at n={}, m={}", t.n, m);
                }
            }
        }
        // alpha = 2 admits n = 0, 1 only.
        let t1 = raise_symmetric(&seed_symmetric(2.0).unwrap()).unwrap();
        assert!(matches!(
            raise_symmetric(&t1),
            Err(CoreError::UnboundState { n: 2, .. })
        ));
    }

    #[test]
    fn recjac_degree_one_closed_form() {
        let jp = JacobiParams {
            a: 3.451_515_2,
            b: 3.148_484_8,
        };
        let out = apply_recjac(&ShiftedPolynomial::one(jp));
        assert!(rel_err(out.coeffs[0], 3.451_515_2) < 1e-14);
        assert!(rel_err(out.coeffs[1], -3.3) < 1e-14);
        assert_eq!(out.degree, 1);
        assert!(rel_err(out.params.a, 2.451_515_2) < 1e-14);
        assert!(rel_err(out.params.b, 2.148_484_8) < 1e-14);
    }

    #[test]
    fn weyl_shift_identity_and_degree_one() {
        let jp = JacobiParams { a: 2.4, b: 1.7 };
        let poly = ShiftedPolynomial::new(jp, vec![1.9, -0.4, 0.7]).unwrap();
        let same = weyl_shift(&poly, WeylOrder { nu: 0.0 }).unwrap();
        assert_eq!(same.coeffs, poly.coeffs);

        // Degree-1 input: c_0 scales by (abar + nu)/abar, c_1 is untouched.
        let abar = 3.451_515_2;
        let nu = 0.065_876_2;
        let input = ShiftedPolynomial::new(
            JacobiParams {
                a: abar - 1.0,
                b: 2.148_484_8,
            },
            vec![abar, -3.3],
        )
        .unwrap();
        let out = weyl_shift(&input, WeylOrder { nu }).unwrap();
        assert!(rel_err(out.coeffs[0], abar * (abar + nu) / abar) < 1e-12);
        assert_eq!(out.coeffs[1], -3.3);
        assert!(rel_err(out.coeffs[0], 3.517_391_4) < 1e-6);
    }

    #[test]
    fn weyl_shift_rejects_bad_gamma_arguments() {
        let poly = ShiftedPolynomial::new(JacobiParams { a: 0.5, b: 0.5 }, vec![1.0, 2.0]).unwrap();
        // abar = 1.5; nu = -2 drives abar + nu negative.
        assert!(matches!(
            weyl_shift(&poly, WeylOrder { nu: -2.0 }),
            Err(CoreError::GammaDomain { .. })
        ));
    }

    #[test]
    fn raise_general_fig1_states() {
        let p = params(3.3, 0.5);
        let s1 = state_poly(&p, 1);
        assert!(rel_err(s1.coeffs[0], 3.517_391_304_347_826) < 1e-12);
        assert!(rel_err(s1.coeffs[1], -3.3) < 1e-12);

        let s2 = state_poly(&p, 2);
        assert!(rel_err(s2.coeffs[0], 4.945_887_573_964_497) < 1e-12);
        assert!(rel_err(s2.coeffs[1], -10.316_923_076_923_077) < 1e-12);
        assert!(rel_err(s2.coeffs[2], 4.62) < 1e-12);
    }

    #[test]
    fn raise_general_symmetric_integer_case() {
        // alpha = 2, beta = 0: state 1 carries P_1^{1,1}(v) = 2v = 2 - 2(1-v).
        let p = params(2.0, 0.0);
        let s1 = state_poly(&p, 1);
        assert!(rel_err(s1.coeffs[0], 2.0) < 1e-13);
        assert!(rel_err(s1.coeffs[1], -2.0) < 1e-13);
    }

    #[test]
    fn raise_general_negative_beta_by_reflection() {
        let p = params(3.3, -0.5);
        let s1 = state_poly(&p, 1);
        // Mirror state of (3.3, +0.5): A = 2.0826087, c_0 = A + 1,
        // c_1 = -(A + B + 2)/2 = -3.3.
        let e = exponents(&p, 1).unwrap();
        let jp = jacobi_params(&e).unwrap();
        assert!(rel_err(s1.coeffs[0], jp.a + 1.0) < 1e-12);
        assert!(rel_err(s1.coeffs[1], -3.3) < 1e-12);
        assert!(rel_err(jp.a, 2.082_608_695_652_174) < 1e-12);
    }

    #[test]
    fn raise_general_rejects_unbound_target() {
        let p = params(3.3, 0.5);
        let s2 = state_poly(&p, 2);
        assert!(matches!(
            raise_general(&s2, &p, 2),
            Err(CoreError::UnboundState { n: 3, .. })
        ));
        let s0 = ShiftedPolynomial::one(jacobi_params(&exponents(&p, 0).unwrap()).unwrap());
        assert!(matches!(
            raise_general(&s0, &p, 5),
            Err(CoreError::InvalidArgument { .. }) | Err(CoreError::UnboundState { .. })
        ));
    }

    #[test]
    fn reflect_is_involutive_and_mirrors_values() {
        let p = params(3.3, 0.5);
        let s2 = state_poly(&p, 2);
        let r = reflect(&s2);
        for &v in &[-0.9, -0.3, 0.0, 0.4, 0.8] {
            let direct = s2.eval(v);
            let mirrored = r.eval(-v);
            // P(v) = (-1)^n P_swapped(-v) with n = 2.
            assert!((direct - mirrored).abs() <= 1e-12 * direct.abs().max(1.0));
        }
        let back = reflect(&r);
        for (a, b) in back.coeffs.iter().zip(&s2.coeffs) {
            assert!((a - b).abs() <= 1e-12 * b.abs().max(1.0));
        }
    }

    #[test]
    fn convert_basis_examples() {
        let jp = JacobiParams { a: 2.5, b: 2.1 };
        let c = ShiftedPolynomial::new(jp, vec![3.517_391_3, -3.3]).unwrap();
        let mono = convert_basis(&c);
        assert!(rel_err(mono[0], 0.217_391_3) < 1e-12);
        assert!(rel_err(mono[1], 3.3) < 1e-12);

        let k = ShiftedPolynomial::new(jp, vec![7.25]).unwrap();
        assert_eq!(convert_basis(&k), vec![7.25]);

        let lin = ShiftedPolynomial::new(jp, vec![0.0, 1.0]).unwrap();
        assert_eq!(convert_basis(&lin), vec![1.0, -1.0]);
    }

    #[test]
    fn chain_coefficients_match_frozen_rounded_values() {
        // Degree-20 state of the widest acceptance potential; expected
        // values are the exact chain rounded once to f64, so the
        // double-double path must land within an ulp of each.
        let p = params(25.0, 3.0);
        let c = chain_coefficients(&p, 20).unwrap();
        assert_eq!(c.len(), 21);
        assert!(rel_err(c[0], 130_034.806_223_894_67) < 3e-16);
        assert!(rel_err(c[5], -55_910_437_710.612_564) < 3e-16);
        assert!(rel_err(c[10], 3_631_325_909_211.922) < 3e-16);
        assert!(rel_err(c[15], -636_312_214_222.490_1) < 3e-16);
        assert!(rel_err(c[20], 44_945_919.269_523_62) < 3e-16);
    }

    #[test]
    fn chain_matches_public_raise_path() {
        let p = params(5.5, 3.0);
        let pub_path = state_poly(&p, 3);
        let dd_path = chain_coefficients(&p, 3).unwrap();
        for (a, b) in pub_path.coeffs.iter().zip(&dd_path) {
            assert!((a - b).abs() <= 1e-12 * b.abs().max(1.0));
        }
    }

    proptest! {
        // Endpoint identities: c_0 = binom(A + n, n) and
        // sum c_m 2^m = (-1)^n binom(B + n, n).
        #[test]
        fn endpoint_identities_hold_after_raises(
            alpha in 1.5..12.0f64,
            beta in 0.0..2.0f64,
            steps in 1usize..5,
        ) {
            let p = params(alpha, beta);
            let count = count_bound_states(&p);
            prop_assume!(count >= 2);
            let steps = steps.min(count - 1);
            let mut poly =
                ShiftedPolynomial::one(jacobi_params(&exponents(&p, 0).unwrap()).unwrap());
            for k in 0..steps {
                match raise_general(&poly, &p, k) {
                    Ok(next) => poly = next,
                    // A near-threshold target is a legitimate refusal.
                    Err(CoreError::ThresholdState { .. }) => return Ok(()),
                    Err(e) => return Err(TestCaseError::fail(format!("{e}"))),
                }
            }
            let n = poly.degree;
            let c0_want = generalized_binomial(poly.params.a + n as f64, n);
            prop_assert!((poly.coeffs[0] - c0_want).abs() <= 1e-9 * c0_want.abs());
            let at_minus_one: f64 = poly
                .coeffs
                .iter()
                .enumerate()
                .map(|(m, &c)| c * 2f64.powi(m as i32))
                .sum();
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let want = sign * generalized_binomial(poly.params.b + n as f64, n);
            prop_assert!((at_minus_one - want).abs() <= 1e-9 * want.abs().max(1e-12));
        }

        // recjac is linear: scaling the input scales the output.
        #[test]
        fn recjac_linearity(
            lambda in -4.0..4.0f64,
            c0 in -2.0..2.0f64,
            c1 in 0.1..2.0f64,
        ) {
            let jp = JacobiParams { a: 2.3, b: 1.9 };
            let base = ShiftedPolynomial::new(jp, vec![c0, c1]).unwrap();
            let scaled_in = ShiftedPolynomial::new(
                jp,
                base.coeffs.iter().map(|c| lambda * c).collect(),
            );
            prop_assume!(scaled_in.is_ok());
            let out_base = apply_recjac(&base);
            let out_scaled = apply_recjac(&scaled_in.unwrap());
            for (s, b) in out_scaled.coeffs.iter().zip(&out_base.coeffs) {
                prop_assert!((s - lambda * b).abs() <= 1e-12 * (lambda * b).abs().max(1e-12));
            }
        }

        // Shifted and monomial representations agree pointwise.
        #[test]
        fn convert_basis_agrees_pointwise(
            alpha in 1.5..10.0f64,
            beta in 0.0..2.0f64,
        ) {
            let p = params(alpha, beta);
            prop_assume!(count_bound_states(&p) >= 3);
            let poly = {
                let jp0 = jacobi_params(&exponents(&p, 0).unwrap()).unwrap();
                let mut poly = ShiftedPolynomial::one(jp0);
                for k in 0..2 {
                    match raise_general(&poly, &p, k) {
                        Ok(next) => poly = next,
                        Err(CoreError::ThresholdState { .. }) => return Ok(()),
                        Err(e) => return Err(TestCaseError::fail(format!("{e}"))),
                    }
                }
                poly
            };
            let mono = convert_basis(&poly);
            for &v in &[-0.9, 0.0, 0.9] {
                let direct = poly.eval(v);
                let horner = mono.iter().rev().fold(0.0, |acc, &c| acc * v + c);
                prop_assert!((direct - horner).abs() <= 1e-12 * direct.abs().max(1.0));
            }
        }
    }
}
