use std::fmt::Write as _;

use ffield::arith::{self, Nat};
use ffield::bertrand::{self, PostulateCertificate};
use ffield::extension::{self, SearchStrategy};
use ffield::identity::{self, IdentityReport};
use ffield::irreducibles::{self, GaussReport, IrreducibleCensus, LIST_LIMIT};
use ffield::series::{self, ZetaReport};
use ffield::{AnyField, CoefficientField, Poly, PrimeField};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::output::{CliError, Outcome};
use crate::{
    BertrandCommand, Cli, Command, DegreeRange, FieldArgs, FieldCommand, GlobalOpts,
    IrreducibleCommand, Strategy, VerifyCommand, ZetaCommand,
};

/// Degrees whose monic count is at most this are cross-checked by enumeration.
const CROSS_CHECK_LIMIT: u64 = LIST_LIMIT;

type CliResult<T> = Result<T, CliError>;

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Field(FieldCommand::Construct {
            p,
            n,
            tower,
            strategy,
            exhaustive_limit,
            samples,
        }) => field_construct(g, *p, *n, tower, *strategy, *exhaustive_limit, *samples),
        Command::Irreducible(IrreducibleCommand::Count { field, range }) => {
            irreducible_count(g, field, range)
        }
        Command::Irreducible(IrreducibleCommand::List { field, range }) => {
            irreducible_list(g, field, range)
        }
        Command::Verify(VerifyCommand::Identity { field, n_max }) => {
            verify_identity(g, field, *n_max)
        }
        Command::Verify(VerifyCommand::Gauss { field, n_max }) => verify_gauss(g, field, *n_max),
        Command::Verify(VerifyCommand::Zeta { field, terms }) => {
            zeta(g, "verify zeta", field, *terms)
        }
        Command::Verify(VerifyCommand::Bertrand { max }) => verify_bertrand(*max),
        Command::Verify(VerifyCommand::All) => verify_all(g),
        Command::Bertrand(BertrandCommand::Scan { max, certificates }) => {
            bertrand_scan(*max, *certificates)
        }
        Command::Bertrand(BertrandCommand::Profile { n }) => bertrand_profile(*n),
        Command::Zeta(ZetaCommand::Check { field, terms }) => zeta(g, "zeta check", field, *terms),
    }
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report serializes")
}

/// A field as given on the command line: realized, or known only by size.
enum FieldSpec {
    Realized(AnyField),
    SizeOnly(u64),
}

impl FieldSpec {
    fn q(&self) -> u64 {
        match self {
            FieldSpec::Realized(k) => k.size(),
            FieldSpec::SizeOnly(q) => *q,
        }
    }

    fn realized(&self) -> Option<&AnyField> {
        match self {
            FieldSpec::Realized(k) => Some(k),
            FieldSpec::SizeOnly(_) => None,
        }
    }

    fn require(&self, op: &str) -> CliResult<&AnyField> {
        self.realized().ok_or_else(|| {
            CliError::usage(format!(
                "{op} needs explicit field arithmetic: give --p (and --tower for prime powers)"
            ))
        })
    }

    fn describe(&self) -> Value {
        match self {
            FieldSpec::Realized(k) => to_json(&k.descriptor()),
            FieldSpec::SizeOnly(q) => json!({ "size": q }),
        }
    }
}

fn build_tower(g: &GlobalOpts, p: u64, tower: &[String]) -> CliResult<AnyField> {
    let mut field: AnyField = PrimeField::new(p)?.into();
    for text in tower {
        let modulus = Poly::parse_compact(&field, text.trim())?;
        let size = modulus
            .degree()
            .finite()
            .and_then(|d| field.size().checked_pow(d as u32));
        match size {
            Some(s) if s <= g.budget_field_size => {}
            _ => {
                return Err(ffield::Error::BudgetExceeded {
                    what: "field size",
                    needed: size.map_or_else(|| "overflow".into(), |s| s.to_string()),
                    limit: g.budget_field_size,
                }
                .into())
            }
        }
        field = extension::build_extension(&field, &modulus)?.into();
    }
    Ok(field)
}

fn resolve_field(g: &GlobalOpts, args: &FieldArgs) -> CliResult<FieldSpec> {
    match (args.p, args.q) {
        (Some(p), q) => {
            let field = build_tower(g, p, &args.tower)?;
            if let Some(q) = q {
                if q != field.size() {
                    return Err(CliError::usage(format!(
                        "--q {q} disagrees with the field of size {} given by --p/--tower",
                        field.size()
                    )));
                }
            }
            Ok(FieldSpec::Realized(field))
        }
        (None, Some(q)) => {
            if !args.tower.is_empty() {
                return Err(CliError::usage("--tower needs --p for the prime base"));
            }
            if arith::is_prime(q) {
                return Ok(FieldSpec::Realized(PrimeField::new(q)?.into()));
            }
            let f = arith::factorize_u64(q)?;
            if q < 2 || f.factors.len() != 1 {
                return Err(ffield::Error::NotPrimePower(q).into());
            }
            Ok(FieldSpec::SizeOnly(q))
        }
        (None, None) => Err(CliError::usage("give a field with --q or --p")),
    }
}

fn degrees(range: &DegreeRange) -> CliResult<Vec<u64>> {
    match (range.degree, range.degree_max) {
        (Some(0), _) | (_, Some(0)) => Err(CliError::usage("degrees start at 1")),
        (Some(d), None) => Ok(vec![d]),
        (None, Some(m)) => Ok((1..=m).collect()),
        _ => Err(CliError::usage("give --degree or --degree-max")),
    }
}

fn poly_json<K: CoefficientField>(f: &Poly<K>) -> CliResult<Value> {
    Ok(json!({ "polynomial": f.to_string(), "compact": f.compact()? }))
}

fn pass_word(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "FAIL"
    }
}

fn field_construct(
    g: &GlobalOpts,
    p: u64,
    n: u64,
    tower: &[String],
    strategy: Strategy,
    exhaustive_limit: u64,
    samples: u64,
) -> CliResult<Outcome> {
    if n == 0 {
        return Err(CliError::usage("--n must be at least 1"));
    }
    let base = build_tower(g, p, tower)?;
    let size = base
        .size()
        .checked_pow(u32::try_from(n).unwrap_or(u32::MAX));
    match size {
        Some(s) if s <= g.budget_field_size => {}
        _ => {
            return Err(ffield::Error::BudgetExceeded {
                what: "field size",
                needed: size.map_or_else(|| format!("{}^{n}", base.size()), |s| s.to_string()),
                limit: g.budget_field_size,
            }
            .into())
        }
    }
    let strategy = match strategy {
        Strategy::Lex => SearchStrategy::LexicographicFirst,
        Strategy::Random => SearchStrategy::RandomWithSeed { seed: g.seed },
    };
    let modulus = extension::find_irreducible(&base, n, strategy)?;
    let field: AnyField = extension::build_extension(&base, &modulus)?.into();
    let axioms = extension::verify_field_axioms(&field, exhaustive_limit, samples, g.seed);
    let frobenius = if field.size() <= exhaustive_limit {
        Some(extension::frobenius_check(&field, exhaustive_limit)?)
    } else {
        None
    };
    let passed = axioms.passed && frobenius.as_ref().is_none_or(|f| f.passed);

    let mut text = String::new();
    writeln!(text, "modulus  {}  [{}]", modulus, modulus.compact()?).unwrap();
    writeln!(text, "size     {}", field.size()).unwrap();
    writeln!(
        text,
        "axioms   {} ({})",
        pass_word(axioms.passed),
        if axioms.exhaustive {
            "exhaustive".to_string()
        } else {
            format!("{} samples", axioms.samples)
        }
    )
    .unwrap();
    match &frobenius {
        Some(f) => writeln!(text, "frobenius {}", pass_word(f.passed)).unwrap(),
        None => writeln!(text, "frobenius skipped (size above exhaustive limit)").unwrap(),
    }

    Ok(Outcome {
        command: "field construct".into(),
        params: json!({
            "p": p, "n": n, "tower": tower, "strategy": strategy,
            "exhaustive_limit": exhaustive_limit, "samples": samples, "seed": g.seed,
        }),
        passed,
        result: json!({
            "modulus": poly_json(&modulus)?,
            "field": field.descriptor(),
            "axioms": axioms,
            "frobenius": frobenius,
        }),
        tsv: vec![
            "key\tvalue".into(),
            format!("modulus\t{}", modulus.compact()?),
            format!("size\t{}", field.size()),
            format!("passed\t{passed}"),
        ],
        text,
    })
}

fn irreducible_count(g: &GlobalOpts, args: &FieldArgs, range: &DegreeRange) -> CliResult<Outcome> {
    let spec = resolve_field(g, args)?;
    let q = spec.q();
    let ds = degrees(range)?;
    let counts: Vec<Nat> = ds
        .iter()
        .map(|&d| irreducibles::count_moebius(q, d))
        .collect::<Result<_, _>>()?;
    let enumerated: Vec<Option<u64>> = match spec.realized() {
        Some(k) => ds
            .par_iter()
            .map(|&d| match arith::checked_pow(q, d, "count") {
                Ok(total) if total <= CROSS_CHECK_LIMIT => {
                    irreducibles::enumerate_irreducibles(k, d).map(|v| Some(v.len() as u64))
                }
                _ => Ok(None),
            })
            .collect::<Result<_, _>>()?,
        None => vec![None; ds.len()],
    };

    let mut rows = Vec::new();
    let mut tsv = vec!["degree\tcount\tenumerated".to_string()];
    let mut text = format!("monic irreducible counts over a field of size {q}\n");
    let mut passed = true;
    for ((d, count), e) in ds.iter().zip(&counts).zip(&enumerated) {
        let agrees = e.is_none_or(|e| Nat::from(e) == *count);
        passed &= agrees;
        rows.push(json!({
            "degree": d,
            "count": count.to_string(),
            "enumerated": e.map(|e| e.to_string()),
            "agrees": agrees,
        }));
        let shown = e.map_or_else(|| "-".to_string(), |e| e.to_string());
        tsv.push(format!("{d}\t{count}\t{shown}"));
        writeln!(text, "{d:>4}  {count}").unwrap();
    }
    Ok(Outcome {
        command: "irreducible count".into(),
        params: json!({ "field": spec.describe(), "degrees": ds }),
        passed,
        result: json!({ "q": q, "rows": rows }),
        tsv,
        text,
    })
}

fn irreducible_list(g: &GlobalOpts, args: &FieldArgs, range: &DegreeRange) -> CliResult<Outcome> {
    let spec = resolve_field(g, args)?;
    let field = spec.require("irreducible list")?;
    let q = field.size();
    let ds = degrees(range)?;
    for &d in &ds {
        let total = arith::checked_pow(q, d, "irreducible list")?;
        if total > LIST_LIMIT {
            return Err(ffield::Error::BudgetExceeded {
                what: "irreducible list",
                needed: total.to_string(),
                limit: LIST_LIMIT,
            }
            .into());
        }
    }
    let lists: Vec<Vec<Poly<AnyField>>> = ds
        .par_iter()
        .map(|&d| irreducibles::enumerate_irreducibles(field, d))
        .collect::<Result<_, _>>()?;

    let mut rows = Vec::new();
    let mut tsv = vec!["degree\tcompact\tpolynomial".to_string()];
    let mut text = String::new();
    let mut passed = true;
    for (&d, list) in ds.iter().zip(&lists) {
        let expected = irreducibles::count_moebius(q, d)?;
        passed &= Nat::from(list.len()) == expected;
        let polys = list.iter().map(poly_json).collect::<CliResult<Vec<_>>>()?;
        rows.push(json!({ "degree": d, "count": list.len().to_string(), "polynomials": polys }));
        writeln!(text, "degree {d}: {} irreducible", list.len()).unwrap();
        for f in list {
            let c = f.compact()?;
            tsv.push(format!("{d}\t{c}\t{f}"));
            writeln!(text, "  {f}  [{c}]").unwrap();
        }
    }
    Ok(Outcome {
        command: "irreducible list".into(),
        params: json!({ "field": spec.describe(), "degrees": ds }),
        passed,
        result: json!({ "q": q, "rows": rows }),
        tsv,
        text,
    })
}

fn identity_grid(g: &GlobalOpts, field: &AnyField, n_max: u64) -> CliResult<Vec<IdentityReport>> {
    if n_max == 0 {
        return Err(CliError::usage("--n-max must be at least 1"));
    }
    Ok((1..=n_max)
        .into_par_iter()
        .map(|n| identity::verify_identity(field, n, g.budget_degree))
        .collect::<Result<Vec<_>, _>>()?)
}

fn identity_summary(reports: &[IdentityReport]) -> (bool, Option<String>, String) {
    let mut text = String::new();
    for r in reports {
        writeln!(
            text,
            "q={} n={}  deg F(n)={}  deg lhs={}  {}",
            r.q,
            r.n,
            r.product_degree,
            r.lhs_degree,
            pass_word(r.identity_holds)
        )
        .unwrap();
    }
    let first_failure = reports.iter().find_map(|r| {
        r.first_failure
            .as_ref()
            .map(|f| format!("q={} n={}: {f}", r.q, r.n))
    });
    (first_failure.is_none(), first_failure, text)
}

fn verify_identity(g: &GlobalOpts, args: &FieldArgs, n_max: u64) -> CliResult<Outcome> {
    let spec = resolve_field(g, args)?;
    let field = spec.require("verify identity")?;
    let reports = identity_grid(g, field, n_max)?;
    let (passed, first_failure, text) = identity_summary(&reports);
    let tsv = std::iter::once("q\tn\tproduct_degree\tlhs_degree\tholds".to_string())
        .chain(reports.iter().map(|r| {
            format!(
                "{}\t{}\t{}\t{}\t{}",
                r.q, r.n, r.product_degree, r.lhs_degree, r.identity_holds
            )
        }))
        .collect();
    Ok(Outcome {
        command: "verify identity".into(),
        params: json!({ "field": spec.describe(), "n_max": n_max, "budget_degree": g.budget_degree }),
        passed,
        result: json!({ "first_failure": first_failure, "instances": reports }),
        tsv,
        text,
    })
}

#[derive(Serialize)]
struct EnumerationCheck {
    degree: u64,
    #[serde(with = "arith::nat_decimal")]
    moebius: Nat,
    #[serde(with = "arith::nat_decimal")]
    enumerated: Nat,
    agrees: bool,
}

struct GaussRun {
    reports: Vec<GaussReport>,
    enumeration: Vec<EnumerationCheck>,
    first_failure: Option<String>,
}

fn gauss_run(spec: &FieldSpec, n_max: u64) -> CliResult<GaussRun> {
    if n_max == 0 {
        return Err(CliError::usage("--n-max must be at least 1"));
    }
    let q = spec.q();
    let census = IrreducibleCensus::from_moebius(q, n_max)?;
    let reports = (1..=n_max)
        .map(|n| irreducibles::verify_gauss(q, n, &census))
        .collect::<Result<Vec<_>, _>>()?;
    let mut enumeration = Vec::new();
    if let Some(field) = spec.realized() {
        let small: Vec<u64> = (1..=n_max)
            .take_while(|&d| {
                arith::checked_pow(q, d, "gauss").is_ok_and(|t| t <= CROSS_CHECK_LIMIT)
            })
            .collect();
        let enumerated = IrreducibleCensus::enumerate(field, small.iter().copied())?;
        for d in small {
            let moebius = census.count(d)?.clone();
            let counted = enumerated.count(d)?.clone();
            enumeration.push(EnumerationCheck {
                degree: d,
                agrees: moebius == counted,
                moebius,
                enumerated: counted,
            });
        }
    }
    let first_failure = reports
        .iter()
        .find(|r| !r.holds)
        .map(|r| format!("q={} n={}: {} != {}", r.q, r.n, r.lhs, r.rhs))
        .or_else(|| {
            enumeration.iter().find(|e| !e.agrees).map(|e| {
                format!(
                    "q={q} degree {}: enumeration {} != formula {}",
                    e.degree, e.enumerated, e.moebius
                )
            })
        });
    Ok(GaussRun {
        reports,
        enumeration,
        first_failure,
    })
}

fn verify_gauss(g: &GlobalOpts, args: &FieldArgs, n_max: u64) -> CliResult<Outcome> {
    let spec = resolve_field(g, args)?;
    let run = gauss_run(&spec, n_max)?;
    let mut text = String::new();
    let mut tsv = vec!["q\tn\tq^n\tsum".to_string()];
    for r in &run.reports {
        writeln!(
            text,
            "q={} n={:>3}  {} = {}  {}",
            r.q,
            r.n,
            r.lhs,
            r.rhs,
            pass_word(r.holds)
        )
        .unwrap();
        tsv.push(format!("{}\t{}\t{}\t{}", r.q, r.n, r.lhs, r.rhs));
    }
    for e in &run.enumeration {
        writeln!(
            text,
            "enumeration degree {:>3}: {}  {}",
            e.degree,
            e.enumerated,
            pass_word(e.agrees)
        )
        .unwrap();
    }
    Ok(Outcome {
        command: "verify gauss".into(),
        params: json!({ "field": spec.describe(), "n_max": n_max }),
        passed: run.first_failure.is_none(),
        result: json!({
            "first_failure": run.first_failure,
            "instances": run.reports,
            "enumeration": run.enumeration,
        }),
        tsv,
        text,
    })
}

fn zeta_report(spec: &FieldSpec, terms: usize) -> CliResult<ZetaReport> {
    let q = spec.q();
    let census = IrreducibleCensus::from_moebius(q, terms as u64)?;
    Ok(series::check_zeta(q, terms, &census)?)
}

fn zeta(g: &GlobalOpts, command: &str, args: &FieldArgs, terms: usize) -> CliResult<Outcome> {
    let spec = resolve_field(g, args)?;
    let report = zeta_report(&spec, terms)?;
    let mut tsv = vec!["n\tzeta\teuler_product\tlog_derivative".to_string()];
    for n in 0..=terms {
        let log = if n == 0 {
            "-"
        } else {
            &report.log_derivative[n - 1]
        };
        tsv.push(format!(
            "{n}\t{}\t{}\t{log}",
            report.zeta[n], report.euler_product[n]
        ));
    }
    let text = format!(
        "q={} T={}\nzeta        {}\nproduct     {}  {}\nlog-deriv   {}  {}\n",
        report.q,
        report.terms,
        report.zeta.join(" "),
        report.euler_product.join(" "),
        pass_word(report.product_matches),
        report.log_derivative.join(" "),
        pass_word(report.log_derivative_matches),
    );
    let first_failure = if !report.product_matches {
        Some("Euler product differs from the zeta series")
    } else if !report.log_derivative_matches {
        Some("logarithmic derivative differs from q^n")
    } else {
        None
    };
    Ok(Outcome {
        command: command.into(),
        params: json!({ "field": spec.describe(), "terms": terms }),
        passed: report.passed,
        result: json!({ "first_failure": first_failure, "report": report }),
        tsv,
        text,
    })
}

#[derive(Serialize)]
struct SubCheck {
    name: &'static str,
    range: String,
    passed: bool,
    first_failure: Option<String>,
}

fn sub_check(
    name: &'static str,
    range: String,
    mut failure: impl Iterator<Item = Option<String>>,
) -> SubCheck {
    let first_failure = failure.find_map(|f| f);
    SubCheck {
        name,
        range,
        passed: first_failure.is_none(),
        first_failure,
    }
}

fn bertrand_checks(max: u64) -> CliResult<(Vec<SubCheck>, ffield::bertrand::ScanSummary)> {
    let mut checks = Vec::new();
    let factorization: Vec<Option<String>> = (1..=30u64)
        .map(|n| {
            let c = arith::central_binomial(n)?;
            let f = arith::factorize(&c)?;
            for p in arith::primes_up_to(2 * n) {
                let v = bertrand::vp_central_binomial(n, p)?;
                if v != u64::from(f.exponent_of(p)) {
                    return Ok(Some(format!(
                        "N={n} p={p}: Legendre {v}, factorization {}",
                        f.exponent_of(p)
                    )));
                }
            }
            let stray = f.primes().find(|&p| p > 2 * n);
            Ok(stray.map(|p| format!("N={n}: prime factor {p} above 2N")))
        })
        .collect::<Result<_, ffield::Error>>()?;
    checks.push(sub_check(
        "valuations match factorization",
        "1..=30".into(),
        factorization.into_iter(),
    ));

    let power_bound: Vec<Option<String>> = (1..=1000u64)
        .into_par_iter()
        .map(|n| {
            for p in arith::primes_up_to(2 * n) {
                if !bertrand::check_prime_power_bound(n, p)? {
                    return Ok(Some(format!("N={n} p={p}")));
                }
            }
            Ok(None)
        })
        .collect::<Result<_, ffield::Error>>()?;
    checks.push(sub_check(
        "prime power at most 2N",
        "1..=1000".into(),
        power_bound.into_iter(),
    ));

    let bounds: Vec<Option<String>> = (1..=60u64)
        .map(|n| {
            let r = bertrand::central_binomial_bounds(n)?;
            Ok((!r.passed).then(|| format!("N={n}")))
        })
        .collect::<Result<_, ffield::Error>>()?;
    checks.push(sub_check(
        "4^N/(2N+1) <= C(2N,N) <= 4^N",
        "1..=60".into(),
        bounds.into_iter(),
    ));

    let (summary, certs) = bertrand::scan_postulate(max)?;
    checks.push(sub_check(
        "prime in (N, 2N]",
        format!("2..={max}"),
        certs
            .iter()
            .map(|c| (!c.is_valid()).then(|| format!("N={} witness {}", c.n, c.witness))),
    ));
    Ok((checks, summary))
}

fn verify_bertrand(max: u64) -> CliResult<Outcome> {
    let (checks, summary) = bertrand_checks(max)?;
    let passed = checks.iter().all(|c| c.passed);
    let mut text = String::new();
    let mut tsv = vec!["check\trange\tpassed".to_string()];
    for c in &checks {
        writeln!(
            text,
            "{:<32} {:<10} {}",
            c.name,
            c.range,
            pass_word(c.passed)
        )
        .unwrap();
        tsv.push(format!("{}\t{}\t{}", c.name, c.range, c.passed));
    }
    writeln!(
        text,
        "largest witness gap {} at N={}",
        summary.largest_gap, summary.largest_gap_at
    )
    .unwrap();
    let first_failure = checks
        .iter()
        .find_map(|c| c.first_failure.as_ref().map(|f| format!("{}: {f}", c.name)));
    Ok(Outcome {
        command: "verify bertrand".into(),
        params: json!({ "max": max }),
        passed,
        result: json!({ "first_failure": first_failure, "checks": checks, "scan": summary }),
        tsv,
        text,
    })
}

/// One row of `verify all`.
#[derive(Serialize)]
struct SuiteResult {
    suite: String,
    passed: bool,
    first_failure: Option<String>,
}

fn verify_all(g: &GlobalOpts) -> CliResult<Outcome> {
    let mut suites = Vec::new();

    let gf4: AnyField = extension::galois_field(2, 2)?.into();
    let grid: [(AnyField, u64); 4] = [
        (PrimeField::new(2)?.into(), 6),
        (PrimeField::new(3)?.into(), 4),
        (PrimeField::new(5)?.into(), 3),
        (gf4, 3),
    ];
    for (field, n_max) in &grid {
        let reports = identity_grid(g, field, *n_max)?;
        let (passed, first_failure, _) = identity_summary(&reports);
        suites.push(SuiteResult {
            suite: format!("identity q={} n<={n_max}", field.size()),
            passed,
            first_failure,
        });
    }

    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let spec = if arith::is_prime(q) {
            FieldSpec::Realized(PrimeField::new(q)?.into())
        } else {
            FieldSpec::SizeOnly(q)
        };
        let run = gauss_run(&spec, 12)?;
        suites.push(SuiteResult {
            suite: format!("gauss q={q} n<=12"),
            passed: run.first_failure.is_none(),
            first_failure: run.first_failure,
        });
    }

    for q in [2u64, 3, 5] {
        let report = zeta_report(&FieldSpec::SizeOnly(q), 12)?;
        suites.push(SuiteResult {
            suite: format!("zeta q={q} T=12"),
            passed: report.passed,
            first_failure: (!report.passed).then(|| "series mismatch".to_string()),
        });
    }

    let (checks, _) = bertrand_checks(100_000)?;
    for c in checks {
        suites.push(SuiteResult {
            suite: format!("bertrand {} {}", c.name, c.range),
            passed: c.passed,
            first_failure: c.first_failure,
        });
    }

    let passed = suites.iter().all(|s| s.passed);
    let mut text = String::new();
    let mut tsv = vec!["suite\tpassed".to_string()];
    for s in &suites {
        writeln!(text, "{:<48} {}", s.suite, pass_word(s.passed)).unwrap();
        tsv.push(format!("{}\t{}", s.suite, s.passed));
    }
    let first_failure = suites.iter().find_map(|s| {
        s.first_failure
            .as_ref()
            .map(|f| format!("{}: {f}", s.suite))
    });
    Ok(Outcome {
        command: "verify all".into(),
        params: json!({ "budget_degree": g.budget_degree }),
        passed,
        result: json!({ "first_failure": first_failure, "suites": suites }),
        tsv,
        text,
    })
}

fn bertrand_scan(max: u64, certificates: bool) -> CliResult<Outcome> {
    let (summary, certs) = bertrand::scan_postulate(max)?;
    let passed = summary.failures == 0;
    let tsv = std::iter::once("N\twitness".to_string())
        .chain(certs.iter().map(|c| format!("{}\t{}", c.n, c.witness)))
        .collect();
    let text = format!(
        "N in [2, {}]: {} certificates, {} failures\nlargest gap witness - N = {} at N={}\n",
        summary.max_n,
        summary.certificates,
        summary.failures,
        summary.largest_gap,
        summary.largest_gap_at
    );
    let mut result = json!({ "summary": summary });
    if certificates {
        result["certificates"] = to_json::<Vec<PostulateCertificate>>(&certs);
    }
    Ok(Outcome {
        command: "bertrand scan".into(),
        params: json!({ "max": max, "certificates": certificates }),
        passed,
        result,
        tsv,
        text,
    })
}

fn bertrand_profile(n: u64) -> CliResult<Outcome> {
    if n == 0 {
        return Err(CliError::usage("--n must be at least 1"));
    }
    let profile = bertrand::valuation_profile(n)?;
    let tsv = std::iter::once("p\tv_p".to_string())
        .chain(
            profile
                .per_prime
                .iter()
                .map(|pv| format!("{}\t{}", pv.p, pv.v_p)),
        )
        .collect();
    let factors: Vec<String> = profile
        .per_prime
        .iter()
        .filter(|pv| pv.v_p > 0)
        .map(|pv| match pv.v_p {
            1 => pv.p.to_string(),
            v => format!("{}^{v}", pv.p),
        })
        .collect();
    let text = format!(
        "C({}, {n}) = {} = {}\n",
        2 * n,
        profile.value,
        factors.join(" * ")
    );
    Ok(Outcome {
        command: "bertrand profile".into(),
        params: json!({ "N": n }),
        passed: profile.reconstructs,
        result: to_json(&profile),
        tsv,
        text,
    })
}
