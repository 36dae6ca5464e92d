//! Classical and extended Bell numbers and polynomials, plus exact
//! verifiers for the binomial-shift and mixed identities connecting them
//! to the extended Stirling polynomials.
//!
//! Verifiers evaluate their two sides through structurally different
//! code paths and share no intermediate sums.

use num_traits::Zero;

use crate::numeric::{binomial, powers, Poly, Rational};
use crate::stirling::{classical_triangle, s2r_table};

/// Classical Bell polynomial `Bel_n(x) = Σ_{m=0}^{n} S_2(n, m) x^m`.
pub fn bell_poly(n: usize) -> Poly {
    let rows = classical_triangle(n);
    Poly::new(
        rows[n]
            .iter()
            .map(|s| Rational::from_integer(s.clone()))
            .collect(),
    )
}

/// Classical Bell number `Bel_n`, the value of [`bell_poly`] at 1.
pub fn bell_number(n: usize) -> Rational {
    bell_poly(n).eval(&crate::numeric::integer(1))
}

/// Extended Bell number `Bel_{n,r} = Σ_{k=0}^{n} S_{2,r}(n, k)`.
pub fn bell_ext_number(n: usize, r: &Rational) -> Rational {
    let table = s2r_table(n, r);
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc += table.value(n, k);
    }
    acc
}

/// The same quantity by the independent route
/// `Bel_{n,r} = Σ_{k=0}^{n} C(n, k) Bel_k r^{n-k}`, built from classical
/// Bell numbers only.
pub fn bell_ext_number_via_binomial(n: usize, r: &Rational) -> Rational {
    let r_pows = powers(r, n);
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc += Rational::from_integer(binomial(n, k as i64))
            * bell_number(k)
            * &r_pows[n - k];
    }
    acc
}

/// Extended Bell polynomial `Bel_{n,r}(λ) = Σ_{m=0}^{n} S_{2,r}(n, m) λ^m`,
/// built from the extended Stirling table.
pub fn bell_ext_poly(n: usize, r: &Rational) -> Poly {
    let table = s2r_table(n, r);
    Poly::new((0..=n).map(|m| table.value(n, m)).collect())
}

/// `Bel_{n,r}(λ)` at a specific `λ`; at `λ = 1` this equals
/// [`bell_ext_number`].
pub fn bell_ext_eval(n: usize, r: &Rational, lambda: &Rational) -> Rational {
    bell_ext_poly(n, r).eval(lambda)
}

/// Checks the binomial-shift identity
/// `Bel_{n,r}(λ) = Σ_{l=0}^{n} C(n, l) r^l λ^l Bel_{n-l}(λ)`
/// for every `n <= n_max`; the right side uses classical Bell
/// polynomials only.
pub fn verify_binomial_shift(n_max: usize, r: &Rational, lambda: &Rational) -> bool {
    let shift_pows = powers(&(r * lambda), n_max);
    for n in 0..=n_max {
        let lhs = bell_ext_eval(n, r, lambda);
        let mut rhs = Rational::zero();
        for l in 0..=n {
            rhs += Rational::from_integer(binomial(n, l as i64))
                * &shift_pows[l]
                * bell_poly(n - l).eval(lambda);
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Checks the mixed identity tying extended Bell values to extended
/// Stirling polynomials at one point `x`:
/// `Σ_{m=0}^{n} C(n, m) x^{n-m} Bel_{m,r}(λ) = Σ_{k=0}^{n} λ^k S_{2,r}(n, k|x)`.
///
/// Both sides are degree-`n` polynomials in `x`, so agreement at `n + 1`
/// distinct points establishes the polynomial identity. Each side
/// assembles its sum from its own freshly built table; no intermediate
/// is shared between them.
pub fn verify_mixed_identity(n: usize, r: &Rational, lambda: &Rational, x: &Rational) -> bool {
    let x_pows = powers(x, n);
    let lambda_pows = powers(lambda, n);

    // Extended Bell route: Bel_{m,r}(λ) as the λ-weighted row sums.
    let bell_table = s2r_table(n, r);
    let mut lhs = Rational::zero();
    for m in 0..=n {
        let mut bel = Rational::zero();
        for j in 0..=m {
            bel += bell_table.value(m, j) * &lambda_pows[j];
        }
        lhs += Rational::from_integer(binomial(n, m as i64)) * &x_pows[n - m] * bel;
    }

    // Extended Stirling polynomial route: S_{2,r}(n, k|x) columnwise.
    let poly_table = s2r_table(n, r);
    let mut rhs = Rational::zero();
    for k in 0..=n {
        let mut value = Rational::zero();
        for m in k..=n {
            value += Rational::from_integer(binomial(n, m as i64))
                * poly_table.value(m, k)
                * &x_pows[n - m];
        }
        rhs += &lambda_pows[k] * value;
    }
    lhs == rhs
}
