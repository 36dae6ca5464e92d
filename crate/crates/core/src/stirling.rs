//! Classical and extended Stirling numbers of the second kind, the
//! extended Stirling polynomials, and exact verifiers for the inversion,
//! convolution, and triple-sum identities they satisfy.
//!
//! Conventions used throughout: values vanish off the triangle (`k > n`)
//! and for any negative index, the `(0, 0)` entry is 1, and the extended
//! numbers at `k = 0` are `δ_{n,0}`. Sums rely on off-triangle terms
//! evaluating to zero silently.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::numeric::{binomial, pascal_triangle, powers, Poly, Rational};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum StirlingError {
    #[error("stirling polynomial requires n >= k (got n={n}, k={k})")]
    PolyIndexOrder { n: usize, k: usize },
    #[error("identity requires n >= m + k (got n={n}, m={m}, k={k})")]
    IndexOrder { n: usize, m: usize, k: usize },
}

/// Classical triangle `S_2(n, k)` for `0 <= k <= n <= n_max`, by the
/// recurrence `S_2(n, k) = k·S_2(n-1, k) + S_2(n-1, k-1)`.
pub(crate) fn classical_triangle(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![BigInt::one()]);
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = vec![BigInt::zero(); n + 1];
        for k in 1..=n {
            let carried = if k < n {
                BigInt::from(k) * &prev[k]
            } else {
                BigInt::zero()
            };
            row[k] = carried + &prev[k - 1];
        }
        rows.push(row);
    }
    rows
}

fn triangle_value(rows: &[Vec<BigInt>], n: usize, k: usize) -> BigInt {
    if k > n {
        BigInt::zero()
    } else {
        rows[n][k].clone()
    }
}

/// Classical Stirling number of the second kind, carried as an integral
/// [`Rational`].
pub fn s2(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let rows = classical_triangle(n);
    Rational::from_integer(rows[n][k].clone())
}

/// Extended Stirling number of the second kind by the closed-form sum
/// `Σ_{l=0}^{k} C(n, l) r^l S_2(n-l, k-l)`; reduces to [`s2`] at `r = 0`
/// and to zero above the diagonal.
pub fn s2r(n: usize, k: usize, r: &Rational) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let rows = classical_triangle(n);
    let r_pows = powers(r, k);
    let mut acc = Rational::zero();
    for l in 0..=k {
        let s = &rows[n - l][k - l];
        if s.is_zero() {
            continue;
        }
        acc += &r_pows[l] * Rational::from_integer(binomial(n, l as i64) * s);
    }
    acc
}

/// Triangular memo of the extended Stirling numbers for one fixed `r`.
/// Immutable after construction; rows are in ascending `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingTable {
    r: Rational,
    rows: Vec<Vec<Rational>>,
}

impl StirlingTable {
    pub fn r(&self) -> &Rational {
        &self.r
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `S_{2,r}(n, k)`, zero off the triangle. Panics for `n` beyond the
    /// table size.
    pub fn value(&self, n: usize, k: usize) -> Rational {
        if k > n {
            Rational::zero()
        } else {
            self.rows[n][k].clone()
        }
    }

    /// Stored entries in `(n, k)` lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(n, row)| row.iter().enumerate().map(move |(k, v)| (n, k, v)))
    }
}

/// Bulk form of the closed-form sum: every `S_{2,r}(n, k)` with
/// `0 <= k <= n <= n_max`, sharing one classical triangle, one Pascal
/// triangle, and one table of powers of `r` across all entries.
pub fn s2r_table(n_max: usize, r: &Rational) -> StirlingTable {
    let classical = classical_triangle(n_max);
    let pascal = pascal_triangle(n_max);
    let r_pows = powers(r, n_max);
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = Rational::zero();
            for l in 0..=k {
                let s = &classical[n - l][k - l];
                if s.is_zero() {
                    continue;
                }
                acc += &r_pows[l] * Rational::from_integer(&pascal[n][l] * s);
            }
            row.push(acc);
        }
        rows.push(row);
    }
    StirlingTable { r: r.clone(), rows }
}

/// Extended Stirling polynomial `S_{2,r}(n, k|x)` as a polynomial in `x`
/// of degree at most `n - k`: the coefficient of `x^{n-m}` is
/// `C(n, m) S_{2,r}(m, k)` for `m = k .. n`.
pub fn s2r_poly(n: usize, k: usize, r: &Rational) -> Result<Poly, StirlingError> {
    if n < k {
        return Err(StirlingError::PolyIndexOrder { n, k });
    }
    let table = s2r_table(n, r);
    let mut coeffs = vec![Rational::zero(); n - k + 1];
    for m in k..=n {
        coeffs[n - m] = Rational::from_integer(binomial(n, m as i64)) * table.value(m, k);
    }
    Ok(Poly::new(coeffs))
}

/// Checks the defining relation of the classical numbers: the falling
/// factorials recombine to the monomial, `x^n = Σ_l S_2(n, l) (x)_l`,
/// coefficient-wise.
pub fn verify_defining_relation(n: usize) -> bool {
    let rows = classical_triangle(n);
    let mut acc = Poly::zero();
    for (l, s) in rows[n].iter().enumerate() {
        if s.is_zero() {
            continue;
        }
        let scaled = crate::numeric::falling_factorial_poly(l)
            .scale(&Rational::from_integer(s.clone()));
        acc = acc.add(&scaled);
    }
    acc == Poly::monomial(n)
}

/// Checks the inversion identity
/// `S_2(n, m) = Σ_{l=0}^{m} C(n, l) (-1)^l r^l S_{2,r}(n-l, m-l)`
/// over the whole triangle `0 <= m <= n <= n_max`, exactly. The left side
/// comes from the classical recurrence, the right from the closed-form
/// extended numbers.
pub fn verify_inversion(n_max: usize, r: &Rational) -> bool {
    let classical = classical_triangle(n_max);
    let table = s2r_table(n_max, r);
    let pascal = pascal_triangle(n_max);
    let r_pows = powers(r, n_max);
    for n in 0..=n_max {
        for m in 0..=n {
            let mut rhs = Rational::zero();
            for l in 0..=m {
                let term = &r_pows[l]
                    * Rational::from_integer(pascal[n][l].clone())
                    * table.value(n - l, m - l);
                if l % 2 == 0 {
                    rhs += term;
                } else {
                    rhs -= term;
                }
            }
            if rhs != Rational::from_integer(classical[n][m].clone()) {
                return false;
            }
        }
    }
    true
}

/// Checks the convolution identity
/// `C(m+k, m) S_{2,r}(n, m+k) = Σ_{l=m}^{n} C(n, l) S_{2,r}(l, m) S_{2,r}(n-l, k)`.
pub fn verify_convolution(
    n: usize,
    m: usize,
    k: usize,
    r: &Rational,
) -> Result<bool, StirlingError> {
    if n < m + k {
        return Err(StirlingError::IndexOrder { n, m, k });
    }
    let table = s2r_table(n, r);
    let lhs = Rational::from_integer(binomial(m + k, m as i64)) * table.value(n, m + k);
    let mut rhs = Rational::zero();
    for l in m..=n {
        let factor = table.value(l, m);
        if factor.is_zero() {
            continue;
        }
        rhs += Rational::from_integer(binomial(n, l as i64)) * factor * table.value(n - l, k);
    }
    Ok(lhs == rhs)
}

/// Checks the triple-sum expansion of the convolution identity, whose
/// right side runs over `n_1`, `l`, `j` with classical Stirling factors:
/// `C(m+k, m) S_{2,r}(n, m+k) =
///  Σ C(n_1, l) C(n-n_1, j) C(n, n_1) r^{l+j} S_2(n_1-l, m-l) S_2(n-n_1-j, k-j)`.
pub fn verify_triple_sum(
    n: usize,
    m: usize,
    k: usize,
    r: &Rational,
) -> Result<bool, StirlingError> {
    if n < m + k {
        return Err(StirlingError::IndexOrder { n, m, k });
    }
    let lhs = Rational::from_integer(binomial(m + k, m as i64)) * s2r(n, m + k, r);
    let classical = classical_triangle(n);
    let pascal = pascal_triangle(n);
    let r_pows = powers(r, m + k);
    let mut rhs = Rational::zero();
    for n1 in m..=n {
        for l in 0..=m {
            let left_part = &pascal[n1][l] * triangle_value(&classical, n1 - l, m - l);
            if left_part.is_zero() {
                continue;
            }
            for j in 0..=k.min(n - n1) {
                let s = triangle_value(&classical, n - n1 - j, k - j);
                if s.is_zero() {
                    continue;
                }
                let ints = &left_part * &pascal[n - n1][j] * &pascal[n][n1] * s;
                rhs += &r_pows[l + j] * Rational::from_integer(ints);
            }
        }
    }
    Ok(lhs == rhs)
}

/// Checks the inverse triple-sum identity, which recovers the classical
/// convolution from alternating-sign extended factors:
/// `C(k+m, m) S_2(n, m+k) =
///  Σ C(n_1, l) C(n-n_1, j) C(n, n_1) (-1)^{l+j} r^{l+j} S_{2,r}(n_1-l, m-l) S_{2,r}(n-n_1-j, k-j)`.
pub fn verify_inverse_triple_sum(
    n: usize,
    m: usize,
    k: usize,
    r: &Rational,
) -> Result<bool, StirlingError> {
    if n < m + k {
        return Err(StirlingError::IndexOrder { n, m, k });
    }
    let classical = classical_triangle(n);
    let lhs = Rational::from_integer(
        binomial(k + m, m as i64) * triangle_value(&classical, n, m + k),
    );
    let table = s2r_table(n, r);
    let pascal = pascal_triangle(n);
    let r_pows = powers(r, m + k);
    let mut rhs = Rational::zero();
    for n1 in m..=n {
        for l in 0..=m {
            let left_part = Rational::from_integer(pascal[n1][l].clone())
                * table.value(n1 - l, m - l);
            if left_part.is_zero() {
                continue;
            }
            for j in 0..=k.min(n - n1) {
                let right_part = table.value(n - n1 - j, k - j);
                if right_part.is_zero() {
                    continue;
                }
                let term = &left_part
                    * Rational::from_integer(&pascal[n - n1][j] * &pascal[n][n1])
                    * right_part
                    * &r_pows[l + j];
                if (l + j) % 2 == 0 {
                    rhs += term;
                } else {
                    rhs -= term;
                }
            }
        }
    }
    Ok(lhs == rhs)
}
