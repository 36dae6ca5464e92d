//! Acceptance suite: one test per release criterion, each printing a
//! PASS line (visible with `--nocapture`). Every identity check is
//! exact; the single statistical criterion is pinned to seed 42 at a
//! 4-sigma threshold.
//!
//! Run with:
//!     cargo test -p extbell-cli --test acceptance -- --nocapture

use std::process::Command;
use std::time::Instant;

use extbell::bell::{
    bell_ext_eval, bell_ext_number, bell_ext_number_via_binomial, bell_ext_poly, bell_number,
    bell_poly, verify_binomial_shift, verify_mixed_identity,
};
use extbell::egf::s2r_via_egf;
use extbell::numeric::{binomial, integer, Rational};
use extbell::poisson::moment_grid_check;
use extbell::probes;
use extbell::stirling::{
    s2, s2r, verify_convolution, verify_defining_relation, verify_inversion,
    verify_inverse_triple_sum, verify_triple_sum,
};
use num_traits::ToPrimitive;

#[test]
fn criterion_1_closed_form_matches_egf_oracle() {
    let start = Instant::now();
    for r in probes::default_r() {
        for n in 0..=25 {
            for k in 0..=n {
                assert_eq!(
                    s2r(n, k, &r),
                    s2r_via_egf(n, k, &r),
                    "mismatch at n={n} k={k} r={r}"
                );
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "took {elapsed:?}, budget 30s");
    println!("criterion 1 (closed form vs EGF oracle, n<=25, 6 r probes): PASS in {elapsed:?}");
}

#[test]
fn criterion_2_classical_reduction_at_r_zero() {
    let zero = integer(0);
    for n in 0..=25 {
        for k in 0..=n {
            assert_eq!(s2r(n, k, &zero), s2(n, k), "s2r(n={n}, k={k}, 0)");
        }
        assert_eq!(bell_ext_poly(n, &zero), bell_poly(n), "bell_ext_poly({n}, 0)");
    }
    println!("criterion 2 (r=0 reduction to classical, n<=25): PASS");
}

#[test]
fn criterion_3_defining_relation() {
    for n in 0..=20 {
        assert!(verify_defining_relation(n), "defining relation at n={n}");
    }
    println!("criterion 3 (defining relation, n<=20): PASS");
}

#[test]
fn criterion_4_inversion() {
    for r in probes::default_r() {
        assert!(verify_inversion(20, &r), "inversion fails for r={r}");
    }
    println!("criterion 4 (inversion over full triangle n<=20, 6 r probes): PASS");
}

#[test]
fn criterion_5_convolution_and_triple_sums() {
    // Worked cell: both sides of the triple-sum identity at
    // (n=2, m=1, k=1, r=1) equal 8.
    let one = integer(1);
    let lhs = Rational::from_integer(binomial(2, 1)) * s2r(2, 2, &one);
    assert_eq!(lhs, integer(8));
    assert!(verify_triple_sum(2, 1, 1, &one).unwrap());

    let start = Instant::now();
    for r in probes::default_r() {
        for m in 0..=12usize {
            for k in 0..=12 - m {
                for n in m + k..=18 {
                    assert!(
                        verify_convolution(n, m, k, &r).unwrap(),
                        "convolution at n={n} m={m} k={k} r={r}"
                    );
                    assert!(
                        verify_triple_sum(n, m, k, &r).unwrap(),
                        "triple sum at n={n} m={m} k={k} r={r}"
                    );
                    assert!(
                        verify_inverse_triple_sum(n, m, k, &r).unwrap(),
                        "inverse triple sum at n={n} m={m} k={k} r={r}"
                    );
                }
            }
        }
    }
    println!(
        "criterion 5 (convolution + triple sums, m+k<=12, n<=18, 6 r probes): PASS in {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_6_bell_consistency() {
    // Exhaustive set-partition enumeration oracle for the Bell numbers.
    fn walk(remaining: usize, blocks: usize, total: &mut u64) {
        if remaining == 0 {
            *total += 1;
            return;
        }
        for _ in 0..blocks {
            walk(remaining - 1, blocks, total);
        }
        walk(remaining - 1, blocks + 1, total);
    }
    fn count_partitions(n: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        let mut total = 0;
        walk(n - 1, 1, &mut total);
        total
    }

    for n in 0..=8 {
        let oracle = count_partitions(n);
        assert_eq!(
            bell_number(n),
            Rational::from_integer(oracle.into()),
            "Bel_{n} vs enumeration"
        );
    }

    let one = integer(1);
    for r in probes::default_r() {
        for n in 0..=25 {
            let via_stirling = bell_ext_number(n, &r);
            assert_eq!(
                via_stirling,
                bell_ext_number_via_binomial(n, &r),
                "number routes at n={n} r={r}"
            );
            assert_eq!(
                bell_ext_eval(n, &r, &one),
                via_stirling,
                "lambda=1 consistency at n={n} r={r}"
            );
        }
    }
    println!("criterion 6 (Bell consistency: enumeration oracle, two number routes, lambda=1): PASS");
}

#[test]
fn criterion_7_shift_and_mixed_identities() {
    let start = Instant::now();
    for r in probes::default_r() {
        for lambda in probes::default_lambda() {
            assert!(
                verify_binomial_shift(20, &r, &lambda),
                "binomial shift at r={r} lambda={lambda}"
            );
            for n in 0..=20usize {
                // Probe x values plus the n+1 integer points 0..=n; a
                // degree-n polynomial identity holds iff it holds at n+1
                // distinct points.
                let mut points = probes::default_x();
                for j in 0..=n {
                    let candidate = integer(j as i64);
                    if !points.contains(&candidate) {
                        points.push(candidate);
                    }
                }
                for x in &points {
                    assert!(
                        verify_mixed_identity(n, &r, &lambda, x),
                        "mixed identity at n={n} r={r} lambda={lambda} x={x}"
                    );
                }
            }
        }
    }
    println!(
        "criterion 7 (binomial shift + mixed identity as polynomial in x, n<=20): PASS in {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_8_poisson_moment_grid() {
    let start = Instant::now();
    for &lambda in &[1.0, 2.0] {
        for &r in &[0.0, 0.5, -0.5] {
            let reports = moment_grid_check(4, lambda, r, 1_000_000, 42, 4.0).unwrap();
            for report in &reports {
                assert!(
                    report.pass,
                    "lambda={lambda} r={r} n={}: z={} exact={} mean={}",
                    report.n, report.z_score, report.exact_value, report.empirical_mean
                );
            }
            // Deterministic re-run reproduces bit-identical reports.
            let again = moment_grid_check(4, lambda, r, 1_000_000, 42, 4.0).unwrap();
            assert_eq!(
                serde_json::to_string(&reports).unwrap(),
                serde_json::to_string(&again).unwrap(),
                "reports not reproducible for lambda={lambda} r={r}"
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}, budget 60s");
    println!(
        "criterion 8 (Poisson grid n<=4, lambda in {{1,2}}, r in {{0,0.5,-0.5}}, 1e6 samples, seed 42): PASS in {elapsed:?}"
    );
}

#[test]
fn criterion_9_cli_poisson_check_is_byte_deterministic() {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_extbell"))
            .args([
                "poisson-check",
                "--n-max",
                "4",
                "--lambda",
                "2",
                "--r",
                "0.5",
                "--samples",
                "1000000",
                "--seed",
                "42",
                "--format",
                "json",
            ])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(second.status.code(), Some(0));
    assert!(!first.stdout.is_empty());
    assert_eq!(first.stdout, second.stdout, "stdout bytes differ across runs");
    println!("criterion 9 (poisson-check JSON byte-identical across runs): PASS");
}

/// Float sanity on the exact side of the Monte Carlo comparison: the
/// rational-to-float conversion feeding the reports matches direct
/// evaluation.
#[test]
fn exact_values_convert_cleanly_to_float() {
    let reports = moment_grid_check(4, 2.0, 0.5, 10_000, 7, 4.0).unwrap();
    let r = Rational::new(1.into(), 2.into());
    let lambda = integer(2);
    for (n, report) in reports.iter().enumerate() {
        let exact = bell_ext_eval(n, &r, &lambda).to_f64().unwrap();
        assert_eq!(report.exact_value, exact);
    }
}
