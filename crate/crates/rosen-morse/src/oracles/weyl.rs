//! Direct quadrature of the Weyl fractional integral
//! `W^nu[f](x) = (1/Gamma(nu)) \int_x^1 (t - x)^{nu-1} f(t) dt`,
//! used as the independent witness for the parameter-shift law realized
//! algebraically by the ladder module.
//!
//! Conventions: the operator lives on the u-interval (0, 1). Polynomial
//! inputs carry coefficients in the v-variable (v in (-1, 1)); the
//! integrand maps each quadrature point through v = 2t - 1 before
//! evaluating, and all (1 - x) factors below refer to the u-variable.

use crate::error::{CoreError, Result};
use crate::ladder::ShiftedPolynomial;
use crate::oracles::jacobi::jacobi_three_term;
use crate::specfun::ln_gamma;

/// 15-point Kronrod abscissae (positive half; even indices interleave the
/// embedded 7-point Gauss nodes at odd indices).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

/// Kronrod weights matching `XGK`.
const WGK: [f64; 8] = [
    0.022_935_322_010_529_225,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];

/// Embedded 7-point Gauss weights (for `XGK[1], XGK[3], XGK[5], XGK[7]`).
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// One Gauss-Kronrod 15(7) panel on `[a, b]`: returns the Kronrod value
/// and the |Kronrod - Gauss| error estimate.
fn kronrod_panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut kronrod = 0.0;
    let mut gauss = 0.0;
    for (i, (&x, &wk)) in XGK.iter().zip(WGK.iter()).enumerate() {
        let val = if x == 0.0 {
            f(mid)
        } else {
            f(mid - half * x) + f(mid + half * x)
        };
        kronrod += wk * val;
        if i % 2 == 1 {
            // Odd Kronrod indices carry the embedded Gauss nodes,
            // including the shared center node at i = 7.
            gauss += WG[i / 2] * val;
        }
    }
    (half * kronrod, half * (kronrod - gauss).abs())
}

/// Integrates `f` over `[a, b]` by adaptive bisection of Gauss-Kronrod
/// panels until the summed error estimate meets `tol`.
///
/// # Errors
/// [`CoreError::ToleranceNotMet`] if the panel budget is exhausted first.
pub(crate) fn adaptive_quadrature<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Result<f64> {
    // Worklist of (lo, hi, value, error), refined worst-first.
    let (v0, e0) = kronrod_panel(f, a, b);
    let mut panels = vec![(a, b, v0, e0)];
    for _ in 0..2000 {
        let total_err: f64 = panels.iter().map(|p| p.3).sum();
        if total_err <= tol {
            return Ok(panels.iter().map(|p| p.2).sum());
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .map(|(i, _)| i)
            .unwrap();
        let (lo, hi, _, _) = panels.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        let (vl, el) = kronrod_panel(f, lo, mid);
        let (vr, er) = kronrod_panel(f, mid, hi);
        panels.push((lo, mid, vl, el));
        panels.push((mid, hi, vr, er));
    }
    let achieved: f64 = panels.iter().map(|p| p.3).sum();
    Err(CoreError::ToleranceNotMet {
        achieved,
        requested: tol,
    })
}

/// Numerically evaluates `W^nu[(1-t)^exponent * poly(t)](x)` with the
/// polynomial argument mapped through `v = 2t - 1`.
///
/// The substitution `t = x + (1-x) s` moves the integral onto `s in (0,1)`;
/// for `nu < 1` the further substitution `s = w^{1/nu}` absorbs the
/// endpoint singularity exactly, leaving a smooth integrand.
///
/// # Errors
/// [`CoreError::InvalidArgument`] unless `0 < x < 1` and `nu > 0`;
/// [`CoreError::ToleranceNotMet`] if adaptive refinement stalls.
pub fn weyl_integral_quadrature(
    coeffs: &ShiftedPolynomial,
    exponent: f64,
    nu: f64,
    x: f64,
) -> Result<f64> {
    if x.is_nan() || x <= 0.0 || x >= 1.0 {
        return Err(CoreError::InvalidArgument {
            name: "x",
            value: x,
            reason: "must lie strictly inside (0, 1) in the u-convention",
        });
    }
    if !nu.is_finite() || nu <= 0.0 {
        return Err(CoreError::InvalidArgument {
            name: "nu",
            value: nu,
            reason: "fractional order must be positive",
        });
    }
    let integrand_at_s = |s: f64| -> f64 {
        let t = x + (1.0 - x) * s;
        (1.0 - t).powf(exponent) * coeffs.eval(2.0 * t - 1.0)
    };
    let raw = if nu < 1.0 {
        // int_0^1 s^{nu-1} g(s) ds = (1/nu) int_0^1 g(w^{1/nu}) dw.
        let smooth = |w: f64| integrand_at_s(w.powf(1.0 / nu));
        adaptive_quadrature(&smooth, 0.0, 1.0, 1e-12)? / nu
    } else {
        let weighted = |s: f64| s.powf(nu - 1.0) * integrand_at_s(s);
        adaptive_quadrature(&weighted, 0.0, 1.0, 1e-12)?
    };
    Ok((1.0 - x).powf(nu) / ln_gamma(nu)?.exp() * raw)
}

/// Closed-form value the quadrature must reproduce when the integrand is a
/// full state product `(1-t)^A P_n^{(A,B)}(2t-1)`:
/// `(1-x)^{A+nu} Gamma(A+n+1)/Gamma(A+nu+n+1) P_n^{(A+nu, B-nu)}(2x-1)`.
pub fn weyl_closed_form(poly: &ShiftedPolynomial, nu: f64, x: f64) -> Result<f64> {
    let a = poly.params.a;
    let b = poly.params.b;
    let n = poly.degree;
    let nf = n as f64;
    let ratio = (ln_gamma(a + nf + 1.0)? - ln_gamma(a + nu + nf + 1.0)?).exp();
    let shifted = jacobi_three_term(a + nu, b - nu, n, 2.0 * x - 1.0)?;
    Ok((1.0 - x).powf(a + nu) * ratio * shifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::JacobiParams;

    fn rel_err(got: f64, want: f64) -> f64 {
        (got - want).abs() / want.abs().max(1e-300)
    }

    fn constant_one() -> ShiftedPolynomial {
        ShiftedPolynomial::one(JacobiParams { a: 0.0, b: 0.0 })
    }

    #[test]
    fn adaptive_panel_integrates_polynomials_exactly() {
        // Kronrod-15 is exact for degree <= 22.
        let f = |x: f64| 3.0 * x * x;
        assert!(rel_err(adaptive_quadrature(&f, 0.0, 2.0, 1e-12).unwrap(), 8.0) < 1e-14);
        let g = |x: f64| (4.0 * x).sin();
        let want = (1.0 - 4.0f64.cos()) / 4.0;
        assert!(rel_err(adaptive_quadrature(&g, 0.0, 1.0, 1e-12).unwrap(), want) < 1e-11);
    }

    #[test]
    fn unit_order_reduces_to_ordinary_integral() {
        let one = constant_one();
        for &x in &[0.1, 0.5, 0.9] {
            let got = weyl_integral_quadrature(&one, 0.0, 1.0, x).unwrap();
            assert!(rel_err(got, 1.0 - x) < 1e-10, "x = {x}");
        }
    }

    #[test]
    fn half_order_of_unity_matches_beta_function_value() {
        // W^{1/2}[1](x) = (1-x)^{1/2} / Gamma(3/2); at x -> 0 this is
        // 2/sqrt(pi). The domain excludes 0, so probe close to it.
        let one = constant_one();
        let got = weyl_integral_quadrature(&one, 0.0, 0.5, 1e-12).unwrap();
        assert!(rel_err(got, std::f64::consts::FRAC_2_SQRT_PI) < 1e-9);
    }

    #[test]
    fn power_law_endpoint_identity() {
        // W^nu[(1-t)^e](x) = Gamma(e+1)/Gamma(e+1+nu) (1-x)^{e+nu}.
        let one = constant_one();
        let (e, nu) = (2.5, 0.7);
        for &x in &[0.2, 0.6] {
            let got = weyl_integral_quadrature(&one, e, nu, x).unwrap();
            let ratio = (ln_gamma(e + 1.0).unwrap() - ln_gamma(e + 1.0 + nu).unwrap()).exp();
            let want = ratio * (1.0 - x).powf(e + nu);
            assert!(rel_err(got, want) < 1e-8, "x = {x}");
        }
    }

    #[test]
    fn degree_one_parameter_shift_law() {
        // P_1^{(A,B)} in the shifted basis: [A+1, -(A+B+2)/2].
        let (a, b) = (2.517_391_3, 2.082_608_7);
        let poly = ShiftedPolynomial::new(
            JacobiParams { a, b },
            vec![a + 1.0, -0.5 * (a + b + 2.0)],
        )
        .unwrap();
        for &nu in &[0.065_876_2, 0.3, 0.8, 1.4] {
            for &x in &[0.1, 0.5, 0.9] {
                let quad = weyl_integral_quadrature(&poly, a, nu, x).unwrap();
                let closed = weyl_closed_form(&poly, nu, x).unwrap();
                assert!(
                    (quad - closed).abs() <= 1e-6 * closed.abs().max(1e-6),
                    "nu = {nu}, x = {x}: {quad} vs {closed}"
                );
            }
        }
    }

    #[test]
    fn rejects_out_of_domain_arguments() {
        let one = constant_one();
        assert!(weyl_integral_quadrature(&one, 0.0, 0.5, 0.0).is_err());
        assert!(weyl_integral_quadrature(&one, 0.0, 0.5, 1.0).is_err());
        assert!(weyl_integral_quadrature(&one, 0.0, -0.2, 0.5).is_err());
        assert!(weyl_integral_quadrature(&one, 0.0, 0.0, 0.5).is_err());
    }
}
