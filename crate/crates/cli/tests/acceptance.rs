//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. All comparisons are exact; the only tolerances are the wall-clock
//! limits below.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use ffield::arith::{self, Nat};
use ffield::bertrand;
use ffield::extension::{self, find_irreducible, SearchStrategy};
use ffield::identity::{self, DEFAULT_DEGREE_BUDGET};
use ffield::irreducibles::{count_moebius, verify_gauss, IrreducibleCensus};
use ffield::series;
use ffield::{AnyField, PrimeField};
use rayon::prelude::*;

const IDENTITY_TIME_LIMIT: Duration = Duration::from_secs(10);
const GAUSS_TIME_LIMIT: Duration = Duration::from_secs(30);
const BERTRAND_TIME_LIMIT: Duration = Duration::from_secs(10);
const FIELD_SIZE_LIMIT: u64 = 512;

type Criterion = (&'static str, Box<dyn FnOnce() -> Verdict>);

struct Verdict {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Verdict {
    Verdict {
        passed: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Verdict {
    Verdict {
        passed: false,
        detail: detail.into(),
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Verdict) -> Verdict {
    let start = Instant::now();
    let v = f();
    let elapsed = start.elapsed();
    let detail = format!(
        "{}; {:.2}s (limit {}s)",
        v.detail,
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    Verdict {
        passed: v.passed && elapsed <= limit,
        detail,
    }
}

fn identity_grid() -> Vec<(AnyField, u64)> {
    let prime = |p| AnyField::from(PrimeField::new(p).unwrap());
    vec![
        (prime(2), 6),
        (prime(3), 4),
        (prime(5), 3),
        (extension::galois_field(2, 2).unwrap().into(), 3),
    ]
}

fn identity_reports() -> Result<Vec<identity::IdentityReport>, ffield::Error> {
    identity_grid()
        .iter()
        .flat_map(|(k, n_max)| (1..=*n_max).map(move |n| (k, n)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(k, n)| identity::verify_identity(k, n, DEFAULT_DEGREE_BUDGET))
        .collect()
}

fn identity_suite() -> Verdict {
    let reports = match identity_reports() {
        Ok(r) => r,
        Err(e) => return fail(e.to_string()),
    };
    for r in &reports {
        let exact_degree = Nat::from(r.lhs_degree) == arith::pow_nat(r.q, r.n);
        if !(r.lhs_equals_rhs && r.lhs_equals_xqn_minus_x && exact_degree && r.degrees_as_claimed) {
            return fail(format!("q={} n={}: {:?}", r.q, r.n, r.first_failure));
        }
    }
    pass(format!(
        "{} instances, lhs = rhs = x^(q^n) - x, deg lhs = q^n",
        reports.len()
    ))
}

fn valuation_suite() -> Verdict {
    let reports = match identity_reports() {
        Ok(r) => r,
        Err(e) => return fail(e.to_string()),
    };
    let mut rows = 0;
    for r in &reports {
        for v in &r.valuations {
            rows += 1;
            if Nat::from(v.direct) != v.formula || v.in_quotient != v.expected_in_quotient {
                return fail(format!(
                    "q={} n={} P={}: direct {} formula {}",
                    r.q, r.n, v.polynomial, v.direct, v.formula
                ));
            }
        }
    }
    pass(format!("{rows} (P, n) pairs, exact"))
}

fn gauss_suite() -> Verdict {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let census = match IrreducibleCensus::from_moebius(q, 12) {
            Ok(c) => c,
            Err(e) => return fail(e.to_string()),
        };
        for n in 1..=12 {
            match verify_gauss(q, n, &census) {
                Ok(r) if r.holds => {}
                Ok(r) => return fail(format!("q={q} n={n}: {} != {}", r.lhs, r.rhs)),
                Err(e) => return fail(e.to_string()),
            }
        }
    }
    for (p, n_max) in [(2u64, 10u64), (3, 6)] {
        let k = PrimeField::new(p).unwrap();
        let census = match IrreducibleCensus::enumerate_up_to(&k, n_max) {
            Ok(c) => c,
            Err(e) => return fail(e.to_string()),
        };
        for n in 1..=n_max {
            let (got, want) = (census.count(n).unwrap(), count_moebius(p, n).unwrap());
            if *got != want {
                return fail(format!("q={p} n={n}: enumeration {got} != {want}"));
            }
        }
    }
    pass("q in {2,3,4,5,7,8,9}, n <= 12; enumeration q=2 n<=10, q=3 n<=6")
}

fn zeta_suite() -> Verdict {
    const T: usize = 12;
    for q in [2u64, 3, 5] {
        let census = IrreducibleCensus::from_moebius(q, T as u64).unwrap();
        let zeta = series::zeta_series(q, T);
        let product = match series::euler_product(&census, T) {
            Ok(s) => s,
            Err(e) => return fail(e.to_string()),
        };
        if product != zeta {
            return fail(format!("q={q}: Euler product differs"));
        }
        let log_d = series::log_derivative_coeffs(&zeta).unwrap();
        let expected: Vec<_> = (1..=T as u64)
            .map(|n| num_bigint::BigInt::from(arith::pow_nat(q, n)))
            .collect();
        if log_d != expected {
            return fail(format!("q={q}: log-derivative differs"));
        }
    }
    pass("q in {2,3,5}, T = 12, coefficient-wise")
}

fn existence_suite() -> Verdict {
    let prime_powers: Vec<u64> = (2..=16u64)
        .filter(|&q| arith::factorize_u64(q).unwrap().factors.len() == 1)
        .collect();
    for &q in &prime_powers {
        for n in 1..=64 {
            match count_moebius(q, n) {
                Ok(c) if c >= Nat::from(1u8) => {}
                other => return fail(format!("count_moebius({q}, {n}) = {other:?}")),
            }
        }
    }
    let mut searches = Vec::new();
    for p in [2u64, 3, 5, 7] {
        let mut n = 1;
        while p.pow(n) <= 1 << 16 {
            searches.push((p, n as u64));
            n += 1;
        }
    }
    let found: Vec<_> = searches
        .par_iter()
        .map(|&(p, n)| {
            let k = PrimeField::new(p).unwrap();
            let f = find_irreducible(&k, n, SearchStrategy::LexicographicFirst)?;
            let ok = f.degree().finite() == Some(n as usize)
                && ffield::irreducibles::is_irreducible_fast(&f)?;
            Ok::<_, ffield::Error>((p, n, ok))
        })
        .collect();
    for r in &found {
        match r {
            Ok((_, _, true)) => {}
            Ok((p, n, false)) => return fail(format!("p={p} n={n}: bad irreducible")),
            Err(e) => return fail(e.to_string()),
        }
    }
    for q in 2..=16 {
        for n in 2..=64 {
            if !identity::verify_degree_bound(q, n) {
                return fail(format!("degree bound q={q} n={n}"));
            }
        }
    }
    pass(format!(
        "{} prime powers x n<=64; {} lex searches; degree bound on 2..=16 x 2..=64",
        prime_powers.len(),
        searches.len()
    ))
}

fn small_fields() -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for p in arith::primes_up_to(FIELD_SIZE_LIMIT) {
        let mut n = 1;
        while p.pow(n) <= FIELD_SIZE_LIMIT {
            out.push((p, n as u64));
            n += 1;
        }
    }
    out
}

fn field_suite() -> Verdict {
    let fields = small_fields();
    let failures: Vec<String> = fields
        .par_iter()
        .filter_map(|&(p, n)| {
            let k: AnyField = match extension::galois_field(p, n) {
                Ok(e) => e.into(),
                Err(e) => return Some(format!("GF({p}^{n}): {e}")),
            };
            let axioms = extension::verify_field_axioms(&k, FIELD_SIZE_LIMIT, 0, 0);
            if !axioms.passed || !axioms.exhaustive {
                return Some(format!("GF({p}^{n}): axioms"));
            }
            match extension::frobenius_check(&k, FIELD_SIZE_LIMIT) {
                Ok(r) if r.passed && r.base_fixed_points == p && r.prime_fixed_points == p => None,
                Ok(_) => Some(format!("GF({p}^{n}): frobenius")),
                Err(e) => Some(format!("GF({p}^{n}): {e}")),
            }
        })
        .collect();
    match failures.first() {
        None => pass(format!(
            "{} fields, exhaustive axioms, inverses and Frobenius",
            fields.len()
        )),
        Some(f) => fail(f.clone()),
    }
}

fn bertrand_suite() -> Verdict {
    for n in 1..=30u64 {
        let f = arith::factorize(&arith::central_binomial(n).unwrap()).unwrap();
        for p in arith::primes_up_to(2 * n) {
            if bertrand::vp_central_binomial(n, p).unwrap() != u64::from(f.exponent_of(p)) {
                return fail(format!("valuation N={n} p={p}"));
            }
        }
        if f.primes().any(|p| p > 2 * n) {
            return fail(format!("N={n}: prime factor above 2N"));
        }
    }
    for n in 1..=1000u64 {
        for p in arith::primes_up_to(2 * n) {
            if !bertrand::check_prime_power_bound(n, p).unwrap() {
                return fail(format!("power bound N={n} p={p}"));
            }
        }
    }
    for n in 1..=60 {
        if !bertrand::central_binomial_bounds(n).unwrap().passed {
            return fail(format!("size bounds N={n}"));
        }
    }
    let (summary, certs) = match bertrand::scan_postulate(100_000) {
        Ok(s) => s,
        Err(e) => return fail(e.to_string()),
    };
    let valid = certs.iter().filter(|c| c.is_valid()).count() as u64;
    let complete = certs.iter().map(|c| c.n).eq(2..=100_000);
    if summary.failures != 0 || valid != 99_999 || !complete {
        return fail(format!(
            "scan: {} valid, {} failures",
            valid, summary.failures
        ));
    }
    pass("valuations N<=30, p^v <= 2N for N<=1000, bounds N<=60, 99999 certificates")
}

fn run_cli(args: &[&str], threads: usize) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ffield"))
        .args(["--no-timestamp", "--threads", &threads.to_string()])
        .args(args)
        .env_remove("FFIELD_FORMAT")
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?} exited with {:?}", out.status.code()));
    }
    Ok(out.stdout)
}

fn determinism_suite() -> Verdict {
    let invocations: [&[&str]; 6] = [
        &["verify", "identity", "--q", "2", "--n-max", "5"],
        &["irreducible", "list", "--p", "3", "--degree-max", "4"],
        &[
            "irreducible",
            "count",
            "--p",
            "2",
            "--tower",
            "2:11",
            "--degree-max",
            "6",
        ],
        &[
            "field",
            "construct",
            "--p",
            "3",
            "--n",
            "5",
            "--strategy",
            "random",
            "--seed",
            "7",
        ],
        &["verify", "gauss", "--q", "2", "--n-max", "12"],
        &["bertrand", "scan", "--max", "2000", "--certificates"],
    ];
    for args in invocations {
        let mut outputs = Vec::new();
        for threads in [1, 1, 2, 4] {
            match run_cli(args, threads) {
                Ok(o) => outputs.push(o),
                Err(e) => return fail(e),
            }
        }
        if outputs.windows(2).any(|w| w[0] != w[1]) {
            return fail(format!("{args:?} output varies"));
        }
    }
    pass(format!(
        "{} invocations x threads {{1,1,2,4}} byte-identical",
        invocations.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "identity suite",
            Box::new(|| timed(IDENTITY_TIME_LIMIT, identity_suite)),
        ),
        ("valuation suite", Box::new(valuation_suite)),
        (
            "gauss suite",
            Box::new(|| timed(GAUSS_TIME_LIMIT, gauss_suite)),
        ),
        ("zeta suite", Box::new(zeta_suite)),
        ("existence", Box::new(existence_suite)),
        ("field construction suite", Box::new(field_suite)),
        (
            "bertrand suite",
            Box::new(|| timed(BERTRAND_TIME_LIMIT, bertrand_suite)),
        ),
        ("determinism", Box::new(determinism_suite)),
    ];
    let mut all = true;
    for (name, check) in criteria {
        let v = check();
        all &= v.passed;
        println!(
            "{} {name}: {}",
            if v.passed { "PASS" } else { "FAIL" },
            v.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
