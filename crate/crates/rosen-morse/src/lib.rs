//! Bound states of the general Rosen-Morse potential
//! `V(x) = -alpha (alpha + 1) sech^2 x + 2 beta tanh x`.
//!
//! The closed-form spectrum ([`spectrum`]) and wave functions ([`wavefn`])
//! are produced by coefficient-level raising recurrences ([`ladder`]): a
//! local differential operator in the symmetric case, and a two-step
//! recurrence (degree raise + gamma-ratio rescale, the coefficient form of
//! a Weyl fractional integral) in the general case. Every closed form is
//! checked against independent numerical routes ([`oracles`]), and
//! [`verify::run_suite`] bundles those checks into a reportable suite.
//!
//! # Example
//! ```
//! use rosen_morse::{build_state, count_bound_states, eval_state, PotentialParams};
//!
//! let p = PotentialParams::new(3.3, 0.5).unwrap();
//! assert_eq!(count_bound_states(&p), 3);
//! let ground = build_state(&p, 0).unwrap();
//! assert!((eval_state(&ground, 0.0) - 0.9894261183140466).abs() < 1e-12);
//! ```

mod dd;
pub mod error;
pub mod ladder;
pub mod oracles;
pub mod specfun;
pub mod spectrum;
pub mod verify;
pub mod wavefn;

pub use error::{CoreError, Result};
pub use ladder::{
    apply_recjac, convert_basis, raise_general, raise_symmetric, reflect, seed_symmetric,
    weyl_shift, ShiftedPolynomial, TanhPolynomial, WeylOrder,
};
pub use spectrum::{
    count_bound_states, energy, exponents, jacobi_params, normalization, physical_energy,
    JacobiParams, PhysicalScale, PotentialParams, StateExponents,
};
pub use verify::{run_suite, CheckReport};
pub use wavefn::{
    build_state, eval_parts, eval_state, node_count, sample, schrodinger_residual, Eigenstate,
    SampleTable,
};
