//! Per-identity grid sweeps. Each sweep walks its parameter grid in
//! ascending tuple order, delegates the actual check to the pure core
//! verifiers, and collects the first failing tuples for the report.

use extbell::bell::{
    bell_ext_eval, bell_ext_number, bell_ext_number_via_binomial, bell_ext_poly, bell_poly,
    verify_binomial_shift, verify_mixed_identity,
};
use extbell::egf::{bell_ext_via_egf, s2r_poly_via_egf, s2r_via_egf};
use extbell::numeric::{integer, Rational};
use extbell::stirling::{
    s2, s2r, s2r_poly, verify_convolution, verify_defining_relation, verify_inversion,
    verify_inverse_triple_sum, verify_triple_sum,
};

use crate::{Identity, VerificationReport};

/// Triple-sum grids cap m + k here; beyond that the quadruple sums stop
/// being desk-scale.
const MK_CAP: usize = 12;
const MAX_REPORTED_FAILURES: usize = 10;

pub struct SweepParams {
    pub n_max: usize,
    pub r_set: Vec<Rational>,
    pub lambda_set: Vec<Rational>,
    /// When absent, mixed-identity sweeps use the probe set plus the
    /// points 0..=n, enough to pin the degree-n polynomial identity.
    pub x_set: Option<Vec<Rational>>,
}

struct Collector {
    checked: u64,
    failed: u64,
    failures: Vec<String>,
}

impl Collector {
    fn new() -> Self {
        Collector {
            checked: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, tuple: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_REPORTED_FAILURES {
                self.failures.push(tuple());
            }
        }
    }

    fn into_report(self, identity: Identity, grid: String) -> VerificationReport {
        VerificationReport {
            identity: identity.name().to_string(),
            grid,
            checked: self.checked,
            pass: self.failed == 0,
            failures: self.failures,
        }
    }
}

fn set_string(values: &[Rational]) -> String {
    let mut out = String::from("{");
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&v.to_string());
    }
    out.push('}');
    out
}

pub fn run(identity: Identity, params: &SweepParams) -> VerificationReport {
    match identity {
        Identity::DefiningRelation => defining_relation(params),
        Identity::Thm1 => thm1(params),
        Identity::Thm2VsEgf => thm2_vs_egf(params),
        Identity::Thm3 => thm3(params),
        Identity::Thm5 => convolution_family(params, Identity::Thm5),
        Identity::Eq27 => convolution_family(params, Identity::Eq27),
        Identity::Eq30 => convolution_family(params, Identity::Eq30),
        Identity::Eq34 => eq34(params),
        Identity::Eq39 => eq39(params),
        Identity::Eq15Eq20 => eq15_eq20(params),
        Identity::R0Reduction => r0_reduction(params),
    }
}

fn defining_relation(params: &SweepParams) -> VerificationReport {
    let mut c = Collector::new();
    for n in 0..=params.n_max {
        c.record(verify_defining_relation(n), || format!("n={n}"));
    }
    c.into_report(
        Identity::DefiningRelation,
        format!("n in 0..={}", params.n_max),
    )
}

/// Both closed forms behind the extended polynomials against the EGF
/// oracle: the lambda form via exp(λ·kernel) and the x form via
/// e^{xt}·kernel^k.
fn thm1(params: &SweepParams) -> VerificationReport {
    let mut c = Collector::new();
    let x_probes = params
        .x_set
        .clone()
        .unwrap_or_else(extbell::probes::default_x);
    for r in &params.r_set {
        for n in 0..=params.n_max {
            for lambda in &params.lambda_set {
                c.record(
                    bell_ext_eval(n, r, lambda) == bell_ext_via_egf(n, r, lambda),
                    || format!("n={n} r={r} lambda={lambda}"),
                );
            }
            for k in 0..=n {
                let poly = s2r_poly(n, k, r).expect("k <= n in sweep");
                for x in &x_probes {
                    c.record(
                        poly.eval(x) == s2r_poly_via_egf(n, k, r, x),
                        || format!("n={n} k={k} r={r} x={x}"),
                    );
                }
            }
        }
    }
    c.into_report(
        Identity::Thm1,
        format!(
            "n in 0..={}; r in {}; lambda in {}; x in {}",
            params.n_max,
            set_string(&params.r_set),
            set_string(&params.lambda_set),
            set_string(&x_probes)
        ),
    )
}

fn thm2_vs_egf(params: &SweepParams) -> VerificationReport {
    let mut c = Collector::new();
    for r in &params.r_set {
        for n in 0..=params.n_max {
            for k in 0..=n {
                c.record(s2r(n, k, r) == s2r_via_egf(n, k, r), || {
                    format!("n={n} k={k} r={r}")
                });
            }
        }
    }
    c.into_report(
        Identity::Thm2VsEgf,
        format!(
            "0<=k<=n<={}; r in {}",
            params.n_max,
            set_string(&params.r_set)
        ),
    )
}

fn thm3(params: &SweepParams) -> VerificationReport {
    let mut c = Collector::new();
    for r in &params.r_set {
        c.record(verify_inversion(params.n_max, r), || {
            format!("n_max={} r={r}", params.n_max)
        });
    }
    c.into_report(
        Identity::Thm3,
        format!(
            "full triangle 0<=m<=n<={} per r; r in {}",
            params.n_max,
            set_string(&params.r_set)
        ),
    )
}

fn convolution_family(params: &SweepParams, which: Identity) -> VerificationReport {
    let mk_cap = MK_CAP.min(params.n_max);
    let mut c = Collector::new();
    for r in &params.r_set {
        for m in 0..=mk_cap {
            for k in 0..=mk_cap - m {
                for n in m + k..=params.n_max {
                    let ok = match which {
                        Identity::Thm5 => verify_convolution(n, m, k, r),
                        Identity::Eq27 => verify_triple_sum(n, m, k, r),
                        Identity::Eq30 => verify_inverse_triple_sum(n, m, k, r),
                        _ => unreachable!("convolution family only"),
                    }
                    .expect("n >= m + k in sweep");
                    c.record(ok, || format!("n={n} m={m} k={k} r={r}"));
                }
            }
        }
    }
    c.into_report(
        which,
        format!(
            "m+k<={mk_cap}; m+k<=n<={}; r in {}",
            params.n_max,
            set_string(&params.r_set)
        ),
    )
}

fn eq34(params: &SweepParams) -> VerificationReport {
    let mut c = Collector::new();
    for r in &params.r_set {
        for lambda in &params.lambda_set {
            c.record(verify_binomial_shift(params.n_max, r, lambda), || {
                format!("n_max={} r={r} lambda={lambda}", params.n_max)
            });
        }
    }
    c.into_report(
        Identity::Eq34,
        format!(
            "n in 0..={} per pair; r in {}; lambda in {}",
            params.n_max,
            set_string(&params.r_set),
            set_string(&params.lambda_set)
        ),
    )
}

fn eq39(params: &SweepParams) -> VerificationReport {
    let mut c = Collector::new();
    for r in &params.r_set {
        for lambda in &params.lambda_set {
            for n in 0..=params.n_max {
                for x in &x_points(params, n) {
                    c.record(verify_mixed_identity(n, r, lambda, x), || {
                        format!("n={n} r={r} lambda={lambda} x={x}")
                    });
                }
            }
        }
    }
    let x_desc = match &params.x_set {
        Some(set) => set_string(set),
        None => "probe set plus 0..=n (pins the degree-n identity in x)".to_string(),
    };
    c.into_report(
        Identity::Eq39,
        format!(
            "n in 0..={}; r in {}; lambda in {}; x in {}",
            params.n_max,
            set_string(&params.r_set),
            set_string(&params.lambda_set),
            x_desc
        ),
    )
}

/// Evaluation points for the mixed identity at a given `n`: the user's
/// set verbatim, or the probe set extended with 0..=n so that agreement
/// at n+1 distinct points proves the polynomial identity in x.
fn x_points(params: &SweepParams, n: usize) -> Vec<Rational> {
    match &params.x_set {
        Some(set) => set.clone(),
        None => {
            let mut points = extbell::probes::default_x();
            for j in 0..=n {
                let candidate = integer(j as i64);
                if !points.contains(&candidate) {
                    points.push(candidate);
                }
            }
            points
        }
    }
}

fn eq15_eq20(params: &SweepParams) -> VerificationReport {
    let mut c = Collector::new();
    for r in &params.r_set {
        for n in 0..=params.n_max {
            c.record(
                bell_ext_number(n, r) == bell_ext_number_via_binomial(n, r),
                || format!("n={n} r={r}"),
            );
        }
    }
    c.into_report(
        Identity::Eq15Eq20,
        format!(
            "n in 0..={}; r in {}",
            params.n_max,
            set_string(&params.r_set)
        ),
    )
}

fn r0_reduction(params: &SweepParams) -> VerificationReport {
    let zero = integer(0);
    let mut c = Collector::new();
    for n in 0..=params.n_max {
        for k in 0..=n {
            c.record(s2r(n, k, &zero) == s2(n, k), || format!("s2r n={n} k={k}"));
        }
        c.record(bell_ext_poly(n, &zero) == bell_poly(n), || {
            format!("bell_ext_poly n={n}")
        });
    }
    c.into_report(
        Identity::R0Reduction,
        format!("0<=k<=n<={} at r=0", params.n_max),
    )
}
