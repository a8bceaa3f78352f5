//! Finite-difference eigenvalue oracle: discretize
//! `-d^2/dx^2 + V(x)` on a uniform grid with Dirichlet walls and extract
//! every eigenvalue below the continuum edge `-2|beta|` by Sturm bisection.
//! Shares nothing with the closed-form spectrum code beyond `V` itself.

use crate::error::{CoreError, Result};
use crate::spectrum::PotentialParams;

/// Uniform Dirichlet grid on `[-L, L]` with `N` interior points and
/// spacing `h = 2L/(N+1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    /// Half-width of the box.
    pub l: f64,
    /// Number of interior points.
    pub n: usize,
}

impl Grid1D {
    /// # Errors
    /// [`CoreError::InvalidGrid`] for `l <= 0` or fewer than 100 interior
    /// points (too coarse to mean anything here).
    pub fn new(l: f64, n: usize) -> Result<Self> {
        if !l.is_finite() || l <= 0.0 {
            return Err(CoreError::InvalidGrid {
                reason: "half-width must be positive and finite",
            });
        }
        if n < 100 {
            return Err(CoreError::InvalidGrid {
                reason: "need at least 100 interior points",
            });
        }
        Ok(Grid1D { l, n })
    }

    /// Grid spacing `2L/(N+1)`.
    pub fn spacing(&self) -> f64 {
        2.0 * self.l / (self.n as f64 + 1.0)
    }

    /// Spacing fine enough for the 2e-3 eigenvalue comparisons.
    pub fn acceptance_grade(&self) -> bool {
        self.spacing() < 0.05
    }

    /// Advisory coarseness check: `h^2 * max|V| > 0.1` means the O(h^2)
    /// discretization error may dominate. The solver still runs; callers
    /// that care (the CLI) surface this as a warning.
    pub fn too_coarse_for(&self, p: &PotentialParams) -> bool {
        let depth = (p.alpha * (p.alpha + 1.0)).abs() + 2.0 * p.beta.abs();
        self.spacing().powi(2) * depth > 0.1
    }
}

/// Number of eigenvalues of the tridiagonal operator strictly below
/// `lambda`, via the LDL^T inertia count (Sturm sequence).
fn count_below(diag: &[f64], off_sq: f64, lambda: f64) -> usize {
    let mut count = 0usize;
    // First row has no off-diagonal contribution: off_sq / inf = 0.
    let mut q = f64::INFINITY;
    for &d in diag {
        q = d - lambda - off_sq / q;
        if q == 0.0 {
            // Exact graze; nudge so the next division stays defined.
            q = -1e-300;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// All discrete eigenvalues below `-2|beta|` of the 3-point discretization
/// of the Schrödinger operator, in increasing order.
pub fn fd_eigensolver(p: &PotentialParams, g: &Grid1D) -> Result<Vec<f64>> {
    let h = g.spacing();
    let inv_h2 = 1.0 / (h * h);
    let diag: Vec<f64> = (0..g.n)
        .map(|i| {
            let x = -g.l + h * (i as f64 + 1.0);
            2.0 * inv_h2 + p.potential(x)
        })
        .collect();
    let off_sq = inv_h2 * inv_h2;

    let edge = -2.0 * p.beta.abs();
    let wanted = count_below(&diag, off_sq, edge);
    // Gershgorin lower bound for the bisection bracket.
    let lower = diag.iter().cloned().fold(f64::INFINITY, f64::min) - 2.0 * inv_h2;

    let mut out = Vec::with_capacity(wanted);
    for j in 0..wanted {
        let mut lo = lower;
        let mut hi = edge;
        // ~60 halvings take the bracket below 1e-12 absolute width.
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if count_below(&diag, off_sq, mid) > j {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= 1e-12 * hi.abs().max(1.0) {
                break;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    Ok(out)
}
