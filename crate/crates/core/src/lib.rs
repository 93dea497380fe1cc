//! Numerical laboratory for approximating the indicator of (0,1] by integer
//! Beurling dilations of the fractional-part function in L2(0,inf).
//!
//! The crate is organized around one pipeline:
//!
//! * [`arith`] sieves the Mobius function, the arithmetic backbone of every
//!   coefficient scheme.
//! * [`special`] evaluates the Riemann zeta function and the complex
//!   log-gamma function on the critical strip, plus the zeta-ratio envelope
//!   machinery tied together by the functional equation.
//! * [`beurling`] builds the dilated fractional-part functions `rho_a` and
//!   the coefficient schemes (natural, Selberg, regularized, Cesaro,
//!   Balazard) supported on `{1..n}`.
//! * [`distance`] measures `|| chi + sum_a c_a rho_a ||^2` by two independent
//!   routes: exact piecewise integration on the real line, and the
//!   Mellin-Plancherel integral against zeta on the critical line.
//! * [`optimize`] assembles the Gram matrix of the dilations and solves the
//!   normal equations for the best coefficients at each support size.
//! * [`cli`] orchestrates parameter sweeps and the cross-module verification
//!   suites behind the command-line interface.

pub mod arith;
pub mod beurling;
pub mod cli;
pub mod distance;
pub mod optimize;
pub mod special;

/// Euler-Mascheroni constant, used by the closed-form moments.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
