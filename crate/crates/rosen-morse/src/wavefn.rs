//! Assembly and evaluation of bound-state wave functions
//! `psi_n(x) = A_n e^{-a x} sech^b(x) * poly(tanh x)`.

use crate::dd::horner3_dd;
use crate::error::{CoreError, Result};
use crate::ladder::{chain_coefficients, ShiftedPolynomial};
use crate::spectrum::{exponents, jacobi_params, normalization, PotentialParams, StateExponents};

/// A fully assembled bound state: everything needed to evaluate `psi_n`
/// and its derivatives anywhere on the line.
///
/// Internally the polynomial factor is stored twice — once in the basis
/// anchored at `v = 1` and once re-expanded around `v = -1` (the mirror
/// state with `beta` negated). Evaluation picks the representation anchored
/// at the far endpoint so the shifted powers never amplify rounding.
#[derive(Debug, Clone)]
pub struct Eigenstate {
    /// State index (also the polynomial degree).
    pub n: usize,
    /// Energy and decay exponents.
    pub exponents: StateExponents,
    /// Normalization constant A_n (positive).
    pub norm: f64,
    /// Polynomial factor in the shifted basis, parameters (A, B) = (b+a, b-a).
    pub poly: ShiftedPolynomial,
    mirror: ShiftedPolynomial,
    params: PotentialParams,
}

/// Tabulated wave function on a uniform grid, with the potential and the
/// state energy carried along for plotting.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleTable {
    /// Strictly increasing sample abscissas.
    pub xs: Vec<f64>,
    /// psi_n at each abscissa.
    pub psis: Vec<f64>,
    /// V(x) at each abscissa.
    pub potential: Vec<f64>,
    /// Dimensionless state energy E_n.
    pub energy: f64,
}

impl Eigenstate {
    /// Potential parameters the state was built for.
    pub fn params(&self) -> &PotentialParams {
        &self.params
    }
}

/// Builds bound state `n`: runs the raising chain from the constant ground
/// polynomial up to degree `n` and attaches the normalization constant and
/// decay exponents.
///
/// # Errors
/// Propagates unbound / threshold errors from the spectrum layer.
pub fn build_state(p: &PotentialParams, n: usize) -> Result<Eigenstate> {
    let e = exponents(p, n)?;
    let jp = jacobi_params(&e)?;
    let norm = normalization(p, n)?;
    let reflected = p.reflected();
    let poly = ShiftedPolynomial {
        params: jp,
        degree: n,
        coeffs: chain_coefficients(p, n)?,
    };
    let mirror = ShiftedPolynomial {
        params: jp.swapped(),
        degree: n,
        coeffs: chain_coefficients(&reflected, n)?,
    };
    Ok(Eigenstate {
        n,
        exponents: e,
        norm,
        poly,
        mirror,
        params: *p,
    })
}

/// `ln cosh x` without overflow: `|x| + ln(1 + e^{-2|x|}) - ln 2`.
fn ln_cosh(x: f64) -> f64 {
    x.abs() + (-2.0 * x.abs()).exp().ln_1p() - std::f64::consts::LN_2
}

/// Evaluates `norm * e^{-a y} sech^b(y) * Q(tanh y)` and its first two
/// y-derivatives for one polynomial representation. Only called with
/// `y >= 0`, where the shifted basis `(1 - v)^m` is well conditioned.
fn eval_view(a: f64, b: f64, norm: f64, coeffs: &[f64], y: f64) -> (f64, f64, f64) {
    let v = y.tanh();
    let s2 = 1.0 - v * v; // sech^2 y
    let (p0, p1, p2) = horner3_dd(coeffs, 1.0 - v);
    // Q and its v-derivatives; d/dv of (1-v)^m brings a sign per order.
    let q = p0;
    let qv = -p1;
    let qvv = p2;
    let env = norm * (-a * y - b * ln_cosh(y)).exp();
    let g1 = -a - b * v; // (ln envelope)'
    let g2 = -b * s2; // (ln envelope)''
    let f = env * q;
    let fp = env * (g1 * q + qv * s2);
    let fpp = env * ((g2 + g1 * g1) * q + 2.0 * g1 * s2 * qv + s2 * s2 * qvv - 2.0 * v * s2 * qv);
    (f, fp, fpp)
}

/// `(psi, psi', psi'')` at `x`, all from closed-form differentiation of the
/// product `e^{-a x} sech^b x * Q(v)` with `dv/dx = 1 - v^2`.
pub fn eval_parts(s: &Eigenstate, x: f64) -> (f64, f64, f64) {
    let a = s.exponents.a;
    let b = s.exponents.b;
    if x >= 0.0 {
        eval_view(a, b, s.norm, &s.poly.coeffs, x)
    } else {
        // psi(x) = (-1)^n psi_mirror(-x); odd derivatives flip sign again.
        let (f, fp, fpp) = eval_view(-a, b, s.norm, &s.mirror.coeffs, -x);
        let sign = if s.n % 2 == 0 { 1.0 } else { -1.0 };
        (sign * f, -sign * fp, sign * fpp)
    }
}

/// Wave-function value `psi_n(x)`.
pub fn eval_state(s: &Eigenstate, x: f64) -> f64 {
    eval_parts(s, x).0
}

/// Pointwise Schrödinger residual
/// `r(x) = -psi'' + V(x) psi - E_n psi`, with `psi''` analytic (no finite
/// differences). Zero up to rounding for an exact eigenstate.
pub fn schrodinger_residual(s: &Eigenstate, x: f64) -> f64 {
    let (f, _, fpp) = eval_parts(s, x);
    -fpp + (s.params.potential(x) - s.exponents.energy) * f
}

/// Counts strict sign changes of `psi_n` sampled on a uniform grid.
/// Exact zeros at grid points are skipped so a node sitting on a sample
/// point is counted once, not twice.
pub fn node_count(s: &Eigenstate, lo: f64, hi: f64, points: usize) -> usize {
    let mut changes = 0usize;
    let mut last = 0.0f64;
    for i in 0..points {
        let x = lo + (hi - lo) * i as f64 / (points - 1).max(1) as f64;
        let val = eval_state(s, x);
        let sign = if val > 0.0 {
            1.0
        } else if val < 0.0 {
            -1.0
        } else {
            continue;
        };
        if last != 0.0 && sign != last {
            changes += 1;
        }
        last = sign;
    }
    changes
}

/// Tabulates `psi_n` and the potential on a uniform grid of `points`
/// abscissas covering `[lo, hi]`.
///
/// # Errors
/// [`CoreError::InvalidGrid`] unless `lo < hi` and `points >= 2`.
pub fn sample(s: &Eigenstate, lo: f64, hi: f64, points: usize) -> Result<SampleTable> {
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(CoreError::InvalidGrid {
            reason: "sample interval must be finite with lo < hi",
        });
    }
    if points < 2 {
        return Err(CoreError::InvalidGrid {
            reason: "sample grid needs at least two points",
        });
    }
    let mut xs = Vec::with_capacity(points);
    let mut psis = Vec::with_capacity(points);
    let mut potential = Vec::with_capacity(points);
    for i in 0..points {
        let x = lo + (hi - lo) * i as f64 / (points - 1) as f64;
        xs.push(x);
        psis.push(eval_state(s, x));
        potential.push(s.params.potential(x));
    }
    Ok(SampleTable {
        xs,
        psis,
        potential,
        energy: s.exponents.energy,
    })
}
