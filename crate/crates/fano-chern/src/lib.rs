//! Exact computation of Chern character coefficients for chains of minimal
//! rational curve families on Fano manifolds.
//!
//! Everything is computed over arbitrary-precision rationals; no floating
//! point appears anywhere in the crate. The main entry points are:
//!
//! - [`Rational`]: exact rational scalar used throughout.
//! - [`combinatorics`]: binomials, Bernoulli numbers, signed surjection-style
//!   sums and power-sum polynomials.
//! - [`coefficients`]: the recursively defined coefficient family
//!   `b(i, j, k)`, closed forms for `k = 0` and `k = 1`, and bulk positivity
//!   verification.
//! - [`symbolic`]: a small calculus of pushforward operators acting on formal
//!   cohomology classes, used as an independent route to the same
//!   coefficients.
//! - [`invariants`]: dimension formulas and invariant pairs for the model
//!   families on classical Fano manifolds.

pub mod combinatorics;
pub mod coefficients;
pub mod error;
pub mod invariants;
pub mod rational;
pub mod symbolic;

pub use error::Error;
pub use rational::Rational;

/// The integer type behind [`Rational`], re-exported so downstream code
/// can name numerators and denominators without a separate dependency.
pub use num_bigint::BigInt;

#[cfg(doctest)]
mod book;
