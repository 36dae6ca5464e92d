//! Monte Carlo checks of the probabilistic reading of the extended Bell
//! polynomials: for Poisson `X` with parameter `λ`, the shifted moment
//! `E[(X + rλ)^n]` equals `Bel_{n,r}(λ)`.
//!
//! This is the only module that touches floating point. Exact values are
//! converted from rationals at the comparison boundary; the identities
//! themselves are verified exactly elsewhere.
//!
//! Sampling is sharded: each shard of the stream derives its own sub-seed
//! from `(seed, shard index)` and partial sums are combined in fixed
//! shard order with compensated summation, so reports are bit-identical
//! for a given `(seed, samples)` no matter how shards are executed.

use serde::Serialize;
use thiserror::Error;

use crate::bell::bell_ext_eval;
use crate::numeric::Rational;
use num_traits::ToPrimitive;

/// Default `|z|` acceptance threshold; ~6×10⁻⁵ single-test false-alarm
/// rate.
pub const DEFAULT_Z_THRESHOLD: f64 = 4.0;
/// Largest `λ` the inversion sampler accepts.
pub const MAX_SAMPLING_LAMBDA: f64 = 50.0;
/// Largest moment order the estimator accepts; relative variance of
/// `(X + rλ)^n` grows too fast beyond this for desk-scale sample counts.
pub const MAX_MOMENT_ORDER: usize = 8;
/// Largest `λ` the estimator accepts.
pub const MAX_MOMENT_LAMBDA: f64 = 10.0;
/// Smallest sample count the estimator accepts.
pub const MIN_SAMPLES: u64 = 10_000;

const SHARD_SIZE: u64 = 1 << 16;

#[derive(Debug, Error, PartialEq)]
pub enum MomentError {
    #[error("lambda must be in (0, {max}] (got {lambda})")]
    LambdaOutOfRange { lambda: f64, max: f64 },
    #[error("moment order must be at most {max} (got {n})")]
    OrderTooLarge { n: usize, max: usize },
    #[error("need at least {min} samples (got {got})")]
    TooFewSamples { got: u64, min: u64 },
}

/// SplitMix64: a fully specified 64-bit counter-based generator (Weyl
/// increment plus finalizer); its streams are bit-identical across
/// platforms.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

fn shard_seed(seed: u64, shard: u64) -> u64 {
    SplitMix64::new(seed ^ shard.wrapping_mul(0x9E37_79B9_7F4A_7C15)).next_u64()
}

/// One Poisson variate by inversion (sequential CDF walk), supported for
/// `0 < λ <= 50`.
pub fn sample_poisson(lambda: f64, rng: &mut SplitMix64) -> Result<u64, MomentError> {
    if !(lambda > 0.0 && lambda <= MAX_SAMPLING_LAMBDA) {
        return Err(MomentError::LambdaOutOfRange {
            lambda,
            max: MAX_SAMPLING_LAMBDA,
        });
    }
    Ok(sample_poisson_unchecked(lambda, rng))
}

fn sample_poisson_unchecked(lambda: f64, rng: &mut SplitMix64) -> u64 {
    let u = rng.next_f64();
    let mut pmf = (-lambda).exp();
    let mut cdf = pmf;
    let mut k = 0u64;
    // pmf > 0 guards against an endless walk if u lands above the
    // representable tail mass.
    while u > cdf && pmf > 0.0 {
        k += 1;
        pmf *= lambda / k as f64;
        cdf += pmf;
    }
    k
}

/// Kahan compensated accumulator; summation order alone then determines
/// the result bits.
#[derive(Clone, Copy, Debug, Default)]
struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    fn add(&mut self, value: f64) {
        let y = value - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum
    }
}

/// Record of one Monte Carlo comparison between the empirical shifted
/// moment and the exact extended Bell value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MomentReport {
    pub n: usize,
    pub lambda: f64,
    pub r: f64,
    pub samples: u64,
    pub seed: u64,
    #[serde(rename = "exact")]
    pub exact_value: f64,
    #[serde(rename = "mean")]
    pub empirical_mean: f64,
    #[serde(rename = "stderr")]
    pub std_error: f64,
    #[serde(rename = "z")]
    pub z_score: f64,
    pub pass: bool,
}

/// Exact `n`-th Poisson moment `E[X^n] = Bel_n(λ)`, i.e. the extended
/// Bell value at `r = 0`.
pub fn exact_moment(n: usize, lambda: &Rational) -> Rational {
    bell_ext_eval(n, &Rational::from_integer(0.into()), lambda)
}

/// Empirical `E[(X + rλ)^n]` from `samples` variates, compared against
/// the exact extended Bell value. Shares its stream derivation with
/// [`moment_grid_check`], so the report for order `n` is identical to the
/// grid entry for the same arguments.
pub fn empirical_shifted_moment(
    n: usize,
    lambda: f64,
    r: f64,
    samples: u64,
    seed: u64,
    threshold: f64,
) -> Result<MomentReport, MomentError> {
    let mut reports = moment_grid_check(n, lambda, r, samples, seed, threshold)?;
    Ok(reports.pop().expect("grid check returns n + 1 reports"))
}

/// One [`MomentReport`] per order `0..=n_max`, all from a single sample
/// stream: variates are drawn once and every power is accumulated
/// together.
pub fn moment_grid_check(
    n_max: usize,
    lambda: f64,
    r: f64,
    samples: u64,
    seed: u64,
    threshold: f64,
) -> Result<Vec<MomentReport>, MomentError> {
    if n_max > MAX_MOMENT_ORDER {
        return Err(MomentError::OrderTooLarge {
            n: n_max,
            max: MAX_MOMENT_ORDER,
        });
    }
    if !(lambda > 0.0 && lambda <= MAX_MOMENT_LAMBDA) {
        return Err(MomentError::LambdaOutOfRange {
            lambda,
            max: MAX_MOMENT_LAMBDA,
        });
    }
    if samples < MIN_SAMPLES {
        return Err(MomentError::TooFewSamples {
            got: samples,
            min: MIN_SAMPLES,
        });
    }

    let shift = r * lambda;
    let orders = n_max + 1;
    let shard_count = samples.div_ceil(SHARD_SIZE);

    // Per-shard partial sums of y^n and y^{2n}, combined afterwards in
    // ascending shard order.
    let mut sums = vec![KahanSum::default(); orders];
    let mut squares = vec![KahanSum::default(); orders];
    for shard in 0..shard_count {
        let count = SHARD_SIZE.min(samples - shard * SHARD_SIZE);
        let mut rng = SplitMix64::new(shard_seed(seed, shard));
        let mut local_sums = vec![KahanSum::default(); orders];
        let mut local_squares = vec![KahanSum::default(); orders];
        for _ in 0..count {
            let x = sample_poisson_unchecked(lambda, &mut rng) as f64;
            let y = x + shift;
            let mut power = 1.0;
            for order in 0..orders {
                local_sums[order].add(power);
                local_squares[order].add(power * power);
                power *= y;
            }
        }
        for order in 0..orders {
            sums[order].add(local_sums[order].value());
            squares[order].add(local_squares[order].value());
        }
    }

    let exact_lambda = Rational::from_float(lambda).expect("lambda validated finite");
    let exact_r = Rational::from_float(r).expect("r is finite");
    let count = samples as f64;
    let mut reports = Vec::with_capacity(orders);
    for (n, (sum, square)) in sums.iter().zip(&squares).enumerate() {
        let mean = sum.value() / count;
        let variance = ((square.value() - count * mean * mean) / (count - 1.0)).max(0.0);
        let std_error = (variance / count).sqrt();
        let exact_value = bell_ext_eval(n, &exact_r, &exact_lambda)
            .to_f64()
            .expect("moment values stay within f64 range");
        let z_score = if std_error > 0.0 {
            (mean - exact_value) / std_error
        } else if mean == exact_value {
            0.0
        } else {
            f64::INFINITY
        };
        reports.push(MomentReport {
            n,
            lambda,
            r,
            samples,
            seed,
            exact_value,
            empirical_mean: mean,
            std_error,
            z_score,
            pass: z_score.abs() <= threshold,
        });
    }
    Ok(reports)
}
