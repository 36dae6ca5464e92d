//! End-to-end checks of the binary: output formats, exit codes, and the
//! round-trip guarantee that printed tables reparse to the exact values
//! they were computed from.

use std::process::{Command, Output};

use extbell::numeric::{ratio, Rational};
use extbell::stirling::s2r;

fn extbell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extbell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn table_s2_csv_has_header_and_values() {
    let out = extbell(&["table", "s2", "--n-max", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,k,value");
    assert!(lines.contains(&"3,2,3"));
}

#[test]
fn table_bell_csv_lists_the_sequence() {
    let out = extbell(&["table", "bell", "--n-max", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "n,value\n0,1\n1,1\n2,2\n3,5\n4,15\n");
}

#[test]
fn table_s2r_csv_row_three() {
    let out = extbell(&["table", "s2r", "--r", "1", "--n-max", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for expected in ["3,0,0", "3,1,1", "3,2,6", "3,3,8"] {
        assert!(text.lines().any(|l| l == expected), "missing {expected}");
    }
}

#[test]
fn table_csv_round_trips_to_exact_values() {
    let r = ratio(-3, 7);
    let out = extbell(&["table", "s2r", "--r", "-3/7", "--n-max", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut rows = 0;
    for line in text.lines().skip(1) {
        let mut fields = line.split(',');
        let n: usize = fields.next().unwrap().parse().unwrap();
        let k: usize = fields.next().unwrap().parse().unwrap();
        let value: Rational = fields.next().unwrap().parse().unwrap();
        assert!(fields.next().is_none());
        assert_eq!(value, s2r(n, k, &r), "entry ({n}, {k})");
        rows += 1;
    }
    assert_eq!(rows, 45);
}

#[test]
fn table_json_round_trips_to_exact_values() {
    let out = extbell(&["table", "s2r", "--r", "1/2", "--n-max", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["kind"], "s2r");
    assert_eq!(doc["r"], "1/2");
    let r = ratio(1, 2);
    for entry in doc["entries"].as_array().unwrap() {
        let n = entry["n"].as_u64().unwrap() as usize;
        let k = entry["k"].as_u64().unwrap() as usize;
        let value: Rational = entry["value"].as_str().unwrap().parse().unwrap();
        assert_eq!(value, s2r(n, k, &r));
    }
}

#[test]
fn verify_passes_and_reports_grid() {
    let out = extbell(&["verify", "defining_relation", "--n-max", "12", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["identity"], "defining_relation");
    assert_eq!(doc["checked"], 13);
    assert_eq!(doc["pass"], true);
    assert!(doc["failures"].as_array().unwrap().is_empty());
}

#[test]
fn verify_accepts_custom_probe_sets() {
    let out = extbell(&[
        "verify",
        "eq15_eq20",
        "--n-max",
        "10",
        "--r-set",
        "2,-5/3,7/2",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn every_identity_passes_on_a_small_grid() {
    for identity in [
        "defining_relation",
        "thm1",
        "thm2_vs_egf",
        "thm3",
        "thm5",
        "eq27",
        "eq30",
        "eq34",
        "eq39",
        "eq15_eq20",
        "r0_reduction",
    ] {
        let out = extbell(&["verify", identity, "--n-max", "6"]);
        assert_eq!(out.status.code(), Some(0), "identity {identity}");
        assert!(stdout(&out).contains(",true"), "identity {identity}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["table", "s2r", "--n-max", "3"][..],           // missing --r
        &["table", "bell", "--n-max", "3", "--r", "1"],  // stray --r
        &["table", "s2", "--n-max", "99"],               // n_max guard
        &["verify", "thm3", "--n-max", "40"],            // n_max guard
        &["verify", "thm3", "--r-set", "1/0"],           // malformed rational
        &["verify", "no_such_identity"],                 // unknown identity
        &["poisson-check", "--lambda", "0", "--r", "0"], // lambda out of range
        &["nonsense"],                                   // unknown subcommand
    ] {
        let out = extbell(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn statistical_failure_exits_one() {
    let out = extbell(&[
        "poisson-check",
        "--n-max",
        "4",
        "--lambda",
        "2",
        "--r",
        "0.5",
        "--samples",
        "10000",
        "--seed",
        "1",
        "--threshold",
        "0.000001",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn poisson_check_csv_has_exact_header() {
    let out = extbell(&[
        "poisson-check",
        "--n-max",
        "1",
        "--lambda",
        "1",
        "--r",
        "0",
        "--samples",
        "10000",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(
        text.lines().next().unwrap(),
        "n,lambda,r,samples,seed,exact,mean,stderr,z,pass"
    );
    assert_eq!(text.lines().count(), 3);
}
