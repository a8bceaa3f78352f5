//! Closed-form bound-state data for the Rosen-Morse potential
//! `V(x) = -alpha (alpha + 1) sech^2 x + 2 beta tanh x`:
//! existence counts, energies, decay exponents, Jacobi parameters, and
//! normalization constants.

use crate::error::{CoreError, Result};
use crate::specfun::ln_gamma;

/// Relative slack used when deciding whether an index sits strictly below
/// the bound-state limit `alpha - sqrt(|beta|)`.
const COUNT_TOLERANCE: f64 = 1e-12;

/// Margin below which `(alpha - n)^2 - |beta|` marks an unnormalizable
/// threshold state.
const THRESHOLD_MARGIN: f64 = 1e-9;

/// Physical unit system attached to a dimensionless potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalScale {
    /// Length scale Delta of the potential profile.
    pub delta: f64,
    /// Particle mass.
    pub mass: f64,
    /// Reduced Planck constant in the caller's unit system.
    pub hbar: f64,
}

/// Dimensionless Rosen-Morse parameters: well depth `alpha`, barrier
/// strength `beta`, and an optional physical scale for unit conversion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    pub alpha: f64,
    pub beta: f64,
    pub scale: Option<PhysicalScale>,
}

impl PotentialParams {
    /// Validates `alpha > 0` and finite parameters.
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= 0.0 {
            return Err(CoreError::InvalidArgument {
                name: "alpha",
                value: alpha,
                reason: "must be finite and positive",
            });
        }
        if !beta.is_finite() {
            return Err(CoreError::InvalidArgument {
                name: "beta",
                value: beta,
                reason: "must be finite",
            });
        }
        Ok(PotentialParams {
            alpha,
            beta,
            scale: None,
        })
    }

    /// Attaches a physical scale (for [`physical_energy`]).
    pub fn with_scale(mut self, scale: PhysicalScale) -> Self {
        self.scale = Some(scale);
        self
    }

    /// Potential value `V(x) = -alpha(alpha+1) sech^2 x + 2 beta tanh x`.
    pub fn potential(&self, x: f64) -> f64 {
        let sech = 1.0 / x.cosh();
        -self.alpha * (self.alpha + 1.0) * sech * sech + 2.0 * self.beta * x.tanh()
    }

    /// The potential reflected through the origin, `x -> -x`, which is the
    /// same family with `beta -> -beta`.
    pub(crate) fn reflected(&self) -> PotentialParams {
        PotentialParams {
            alpha: self.alpha,
            beta: -self.beta,
            scale: self.scale,
        }
    }
}

/// Per-state energy and asymptotic decay data.
///
/// The wave function behaves like `e^{-(b+a)x}` as `x -> +inf` and like
/// `e^{(b-a)x}` as `x -> -inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateExponents {
    /// State index.
    pub n: usize,
    /// Dimensionless energy E_n.
    pub energy: f64,
    /// Asymmetric decay exponent a = beta / (alpha - n).
    pub a: f64,
    /// Symmetric decay exponent b = alpha - n.
    pub b: f64,
}

/// Jacobi-polynomial parameter pair `(A, B) = (b + a, b - a)` carried by a
/// bound state's polynomial factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    /// First Jacobi parameter, A = b + a.
    pub a: f64,
    /// Second Jacobi parameter, B = b - a.
    pub b: f64,
}

impl JacobiParams {
    /// Parameters of the reflected polynomial (`v -> -v` swaps A and B).
    pub fn swapped(&self) -> JacobiParams {
        JacobiParams {
            a: self.b,
            b: self.a,
        }
    }
}

/// Number of bound states: integers `n >= 0` with
/// `n < alpha - sqrt(|beta|)`, the boundary case counting as unbound.
pub fn count_bound_states(p: &PotentialParams) -> usize {
    let limit = p.alpha - p.beta.abs().sqrt();
    if limit <= COUNT_TOLERANCE {
        return 0;
    }
    (limit - COUNT_TOLERANCE).ceil() as usize
}

fn check_bound(p: &PotentialParams, n: usize) -> Result<()> {
    if n >= count_bound_states(p) {
        return Err(CoreError::UnboundState {
            n,
            limit: p.alpha - p.beta.abs().sqrt(),
        });
    }
    Ok(())
}

/// Dimensionless bound-state energy
/// `E_n = -(alpha - n)^2 - beta^2 / (alpha - n)^2`.
///
/// # Errors
/// [`CoreError::UnboundState`] if `n` is not strictly below the bound-state
/// limit.
pub fn energy(p: &PotentialParams, n: usize) -> Result<f64> {
    check_bound(p, n)?;
    let b = p.alpha - n as f64;
    Ok(-b * b - (p.beta * p.beta) / (b * b))
}

/// Decay exponents and energy of bound state `n`.
pub fn exponents(p: &PotentialParams, n: usize) -> Result<StateExponents> {
    let e = energy(p, n)?;
    let b = p.alpha - n as f64;
    Ok(StateExponents {
        n,
        energy: e,
        a: p.beta / b,
        b,
    })
}

/// Jacobi parameters `(A, B) = (b + a, b - a)` of the state's polynomial.
///
/// # Errors
/// [`CoreError::ThresholdState`] if either parameter is below 1e-9: the
/// normalization integral contains `1/A + 1/B` and diverges at the
/// threshold `(alpha - n)^2 = |beta|`.
pub fn jacobi_params(e: &StateExponents) -> Result<JacobiParams> {
    let big_a = e.b + e.a;
    let big_b = e.b - e.a;
    let margin = big_a.min(big_b);
    if margin <= THRESHOLD_MARGIN {
        return Err(CoreError::ThresholdState { n: e.n, margin });
    }
    Ok(JacobiParams { a: big_a, b: big_b })
}

/// Positive normalization constant A_n, from `|A_n|^{-2} = 2^{2b-1}
/// Gamma(b+a+n+1) Gamma(b-a+n+1) (1/(b+a) + 1/(b-a)) / (n! Gamma(2b+n+1))`,
/// evaluated in log space.
///
/// # Errors
/// [`CoreError::UnboundState`] for unbound `n`;
/// [`CoreError::ThresholdState`] when `(alpha - n)^2 - |beta|` is within
/// 1e-9 of the divergence threshold.
pub fn normalization(p: &PotentialParams, n: usize) -> Result<f64> {
    let e = exponents(p, n)?;
    let margin = e.b * e.b - p.beta.abs();
    if margin < THRESHOLD_MARGIN {
        return Err(CoreError::ThresholdState { n, margin });
    }
    let jp = jacobi_params(&e)?;
    let nf = n as f64;
    let ln_inv_sq = (2.0 * e.b - 1.0) * std::f64::consts::LN_2
        + ln_gamma(jp.a + nf + 1.0)?
        + ln_gamma(jp.b + nf + 1.0)?
        - ln_gamma(nf + 1.0)?
        - ln_gamma(2.0 * e.b + nf + 1.0)?;
    let sum = 1.0 / jp.a + 1.0 / jp.b;
    Ok((-0.5 * ln_inv_sq).exp() / sum.sqrt())
}

/// Converts a dimensionless energy to the caller's units:
/// `hbar^2 e / (2 m Delta^2)`.
///
/// # Errors
/// [`CoreError::MissingScale`] if the potential carries no physical scale.
pub fn physical_energy(p: &PotentialParams, e_dimless: f64) -> Result<f64> {
    let scale = p.scale.ok_or(CoreError::MissingScale)?;
    Ok(scale.hbar * scale.hbar * e_dimless / (2.0 * scale.mass * scale.delta * scale.delta))
}
