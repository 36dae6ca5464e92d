//! Truncated exponential-generating-function arithmetic over exact
//! rationals, used as the independent oracle for every closed-form
//! computation in this crate.
//!
//! All extractions read `a_n = n! · [t^n]` from a series truncated at
//! order `n`. The kernel `e^t - 1 + rt` has valuation 1, so each of its
//! powers has valuation at least the exponent and truncation at the
//! target order loses nothing.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::numeric::{factorial, powers, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("series exponential requires a zero constant term")]
    NonzeroConstantTerm,
}

/// The first `order + 1` Taylor coefficients `c_0 .. c_order` of a
/// formal power series in `t`. Unlike [`crate::numeric::Poly`] there is
/// no trailing trim: the truncation order is part of the value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Builds a series of the given order from the leading coefficients,
    /// padding with zeros. Panics if more than `order + 1` coefficients
    /// are supplied.
    pub fn from_coeffs(order: usize, leading: &[Rational]) -> Self {
        assert!(
            leading.len() <= order + 1,
            "{} coefficients exceed order {}",
            leading.len(),
            order
        );
        let mut s = Self::zero(order);
        s.coeffs[..leading.len()].clone_from_slice(leading);
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }
}

/// Cauchy product truncated at the common order.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    check_orders(a, b)?;
    let order = a.order();
    let mut out = TruncatedSeries::zero(order);
    for (i, ca) in a.coeffs.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.coeffs.iter().take(order + 1 - i).enumerate() {
            if cb.is_zero() {
                continue;
            }
            out.coeffs[i + j] += ca * cb;
        }
    }
    Ok(out)
}

pub fn series_add(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    check_orders(a, b)?;
    let coeffs = a
        .coeffs
        .iter()
        .zip(&b.coeffs)
        .map(|(ca, cb)| ca + cb)
        .collect();
    Ok(TruncatedSeries { coeffs })
}

pub fn series_scale(a: &TruncatedSeries, c: &Rational) -> TruncatedSeries {
    TruncatedSeries {
        coeffs: a.coeffs.iter().map(|ca| ca * c).collect(),
    }
}

/// `exp(a)` truncated at the order of `a`, for series with zero constant
/// term. Uses the derivative recurrence `n·c_n = Σ_{i=1}^{n} i·a_i·c_{n-i}`
/// (from `c' = a'·c`), which keeps every intermediate exact without
/// factorial blowup.
pub fn series_exp(a: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    if !a.coeffs[0].is_zero() {
        return Err(SeriesError::NonzeroConstantTerm);
    }
    let order = a.order();
    let mut out = TruncatedSeries::zero(order);
    out.coeffs[0] = Rational::one();
    for n in 1..=order {
        let mut acc = Rational::zero();
        for i in 1..=n {
            if a.coeffs[i].is_zero() {
                continue;
            }
            acc += crate::numeric::integer(i as i64) * &a.coeffs[i] * &out.coeffs[n - i];
        }
        out.coeffs[n] = acc / crate::numeric::integer(n as i64);
    }
    Ok(out)
}

/// The base kernel `e^t - 1 + rt`: coefficients `0, 1 + r, 1/2!, 1/3!, …`.
pub fn kernel_series(r: &Rational, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    if order >= 1 {
        s.coeffs[1] = Rational::one() + r;
    }
    let mut inv_fact = Rational::one();
    for i in 2..=order {
        inv_fact /= crate::numeric::integer(i as i64);
        s.coeffs[i] = inv_fact.clone();
    }
    s
}

/// `e^{xt}` truncated at `order`: coefficients `x^i / i!`.
fn exp_xt(x: &Rational, order: usize) -> TruncatedSeries {
    let xp = powers(x, order);
    let mut s = TruncatedSeries::zero(order);
    let mut inv_fact = Rational::one();
    for (i, p) in xp.into_iter().enumerate() {
        if i >= 2 {
            inv_fact /= crate::numeric::integer(i as i64);
        }
        s.coeffs[i] = p * &inv_fact;
    }
    s
}

fn kernel_power(r: &Rational, exponent: usize, order: usize) -> TruncatedSeries {
    let kernel = kernel_series(r, order);
    let mut acc = TruncatedSeries::one(order);
    for _ in 0..exponent {
        acc = series_mul(&acc, &kernel).expect("orders match by construction");
    }
    acc
}

fn extract(series: &TruncatedSeries, n: usize) -> Rational {
    series.coeff(n) * Rational::from_integer(factorial(n))
}

/// Extended Stirling number via the generating series: `n! · [t^n]` of
/// `(e^t - 1 + rt)^k / k!`. Zero for `k > n` since the k-th kernel power
/// has valuation `k`.
pub fn s2r_via_egf(n: usize, k: usize, r: &Rational) -> Rational {
    let pw = kernel_power(r, k, n);
    extract(&pw, n) / Rational::from_integer(factorial(k))
}

/// Extended Stirling polynomial value via the generating series:
/// `n! · [t^n]` of `e^{xt} (e^t - 1 + rt)^k / k!`, with `x` a numeric
/// scalar rather than a symbolic indeterminate.
pub fn s2r_poly_via_egf(n: usize, k: usize, r: &Rational, x: &Rational) -> Rational {
    let pw = kernel_power(r, k, n);
    let shifted = series_mul(&exp_xt(x, n), &pw).expect("orders match by construction");
    extract(&shifted, n) / Rational::from_integer(factorial(k))
}

/// Extended Bell polynomial value via the generating series:
/// `n! · [t^n]` of `exp(λ(e^t - 1 + rt))`.
pub fn bell_ext_via_egf(n: usize, r: &Rational, lambda: &Rational) -> Rational {
    let scaled = series_scale(&kernel_series(r, n), lambda);
    let e = series_exp(&scaled).expect("kernel has zero constant term");
    extract(&e, n)
}

fn check_orders(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<(), SeriesError> {
    if a.order() != b.order() {
        return Err(SeriesError::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    Ok(())
}
