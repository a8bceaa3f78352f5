//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, CoreError>;

/// Everything that can go wrong when computing bound states or running the
/// numerical oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    /// An argument that must be finite (and possibly positive) was not.
    #[error("invalid argument {name} = {value}: {reason}")]
    InvalidArgument {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// A gamma-function argument hit the non-positive real axis.
    #[error("gamma argument {x} is outside the supported domain (x > 0)")]
    GammaDomain { x: f64 },

    /// Requested state index is at or above the bound-state count.
    #[error("state n = {n} is not bound (limit alpha - sqrt(|beta|) = {limit})")]
    UnboundState { n: usize, limit: f64 },

    /// State sits too close to the normalizability threshold (alpha - n)^2 = |beta|.
    #[error("state n = {n} is within {margin:e} of the normalizability threshold")]
    ThresholdState { n: usize, margin: f64 },

    /// Operation defined only for the symmetric (beta = 0) potential.
    #[error("operation requires beta = 0 (got beta = {beta})")]
    SymmetricOnly { beta: f64 },

    /// Two states passed to a binary operation came from different potentials.
    #[error("states belong to different potentials: ({alpha1}, {beta1}) vs ({alpha2}, {beta2})")]
    ParameterMismatch {
        alpha1: f64,
        beta1: f64,
        alpha2: f64,
        beta2: f64,
    },

    /// The three-term Jacobi recurrence hit a vanishing denominator.
    #[error("jacobi recurrence degenerate at k = {k}: {value} too close to zero")]
    DegenerateRecurrence { k: usize, value: f64 },

    /// Adaptive quadrature could not reach the requested tolerance.
    #[error("quadrature stalled at error {achieved:e} (requested {requested:e})")]
    ToleranceNotMet { achieved: f64, requested: f64 },

    /// Physical unit conversion requested without a physical scale attached.
    #[error("potential has no physical scale (delta, mass, hbar) attached")]
    MissingScale,

    /// A discretization grid failed validation.
    #[error("invalid grid: {reason}")]
    InvalidGrid { reason: &'static str },
}
