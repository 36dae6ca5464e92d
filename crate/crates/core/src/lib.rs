//! Exact-arithmetic library for the extended Stirling numbers and
//! polynomials of the second kind and the extended Bell numbers and
//! polynomials, together with the machinery to verify their identities
//! along three mutually independent computation paths:
//!
//! * closed-form triangular sums over big rationals ([`stirling`],
//!   [`bell`]),
//! * truncated exponential-generating-function expansion ([`egf`]),
//! * Monte Carlo estimation of Poisson moments ([`poisson`]).
//!
//! All core values are exact [`numeric::Rational`]s; floating point is
//! confined to the Monte Carlo layer.

pub mod bell;
pub mod egf;
pub mod numeric;
pub mod poisson;
pub mod probes;
pub mod stirling;

pub use numeric::{Poly, Rational};
pub use stirling::StirlingTable;
