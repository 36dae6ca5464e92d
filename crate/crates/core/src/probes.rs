//! Fixed probe sets for identity sweeps, shared by the test suites and
//! the CLI defaults so verification reports are reproducible. Each set
//! mixes identity elements, sign changes, and non-integers to exercise
//! the rational arithmetic. Negative `λ` is algebraically valid for the
//! exact identities even though the Poisson interpretation needs `λ > 0`.

use crate::numeric::{integer, ratio, Rational};

/// Probe values for the extension parameter `r`.
pub fn default_r() -> Vec<Rational> {
    vec![
        integer(0),
        integer(1),
        integer(-1),
        ratio(1, 2),
        ratio(-3, 7),
        integer(5),
    ]
}

/// Probe values for the Bell polynomial argument `λ`.
pub fn default_lambda() -> Vec<Rational> {
    vec![integer(1), ratio(2, 3), ratio(-1, 2), ratio(5, 2)]
}

/// Probe values for the Stirling polynomial argument `x`.
pub fn default_x() -> Vec<Rational> {
    vec![integer(0), integer(1), ratio(-2, 5)]
}
