//! Exact rational scalars, binomial coefficients, and dense univariate
//! polynomials. Everything downstream computes over these; no floating
//! point enters until the Monte Carlo layer.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational scalar. Always stored reduced with a
/// positive denominator, so equality is field-wise. Division by zero
/// panics, like integer division.
///
/// Parses from and renders to the `"p/q"` string form (`q` omitted when
/// it is 1), e.g. `"-3/7"`, `"5"`.
pub type Rational = num_rational::BigRational;

/// Shorthand for `num/den` as a [`Rational`].
///
/// Panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The integer `n` as a [`Rational`].
pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Binomial coefficient `C(n, k)`, with `C(n, k) = 0` whenever `k < 0`
/// or `k > n`. Every triangular sum in this crate relies on the
/// out-of-range terms vanishing silently.
pub fn binomial(n: usize, k: i64) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Pascal triangle of `C(n, k)` for `0 <= k <= n <= n_max`, for bulk
/// consumers that would otherwise recompute coefficients per term.
pub(crate) fn pascal_triangle(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = vec![BigInt::one(); n + 1];
        for k in 1..n {
            row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
        }
        rows.push(row);
    }
    rows
}

/// `base^0 .. base^up_to` by running product.
pub(crate) fn powers(base: &Rational, up_to: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(up_to + 1);
    out.push(Rational::one());
    for i in 1..=up_to {
        let next = &out[i - 1] * base;
        out.push(next);
    }
    out
}

/// Dense univariate polynomial over [`Rational`], coefficients in
/// ascending degree. The indeterminate is named by context (`x` or `λ`).
///
/// Canonical form: the highest stored coefficient is nonzero, and the
/// zero polynomial is the empty coefficient sequence, so derived
/// equality is exact polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    /// Builds a polynomial, trimming trailing zero coefficients.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `x^degree`.
    pub fn monomial(degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = Rational::one();
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, v: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Poly::new(coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }
}

/// The falling factorial `(x)_l = x(x-1)···(x-l+1)` as a polynomial of
/// degree `l`; the empty product `l = 0` is the constant 1.
pub fn falling_factorial_poly(l: usize) -> Poly {
    let mut acc = Poly::constant(Rational::one());
    for i in 0..l {
        let linear = Poly::new(vec![integer(-(i as i64)), Rational::one()]);
        acc = acc.mul(&linear);
    }
    acc
}
