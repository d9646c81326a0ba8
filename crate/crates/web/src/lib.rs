//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each export returns a JSON string. The `*_json` functions hold the logic
//! and are plain Rust so they can be tested natively.

use ffield::arith::{self, checked_pow};
use ffield::bertrand;
use ffield::extension::{self, SearchStrategy};
use ffield::irreducibles::{count_moebius, enumerate_irreducibles};
use ffield::{AnyField, CoefficientField, Poly, PrimeField};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest degree-`d` search space listed in full.
pub const LIST_LIMIT: u64 = 4096;
/// Largest field whose operation tables are returned.
pub const TABLE_LIMIT: u64 = 32;
/// Largest field the demo constructs.
pub const FIELD_LIMIT: u64 = 1 << 16;
pub const MAX_DEGREE: u64 = 64;

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn field_from(p: u64, tower: &str) -> Result<AnyField, String> {
    let mut field: AnyField = PrimeField::new(p).map_err(err)?.into();
    for text in tower.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let modulus = Poly::parse_compact(&field, text).map_err(err)?;
        let d = modulus.degree().finite().unwrap_or(0) as u64;
        match checked_pow(field.size(), d, "tower") {
            Ok(size) if size <= FIELD_LIMIT => {}
            _ => return Err(format!("tower is larger than {FIELD_LIMIT} elements")),
        }
        field = extension::build_extension(&field, &modulus)
            .map_err(err)?
            .into();
    }
    Ok(field)
}

fn poly_value<K: CoefficientField>(f: &Poly<K>) -> Result<Value, String> {
    Ok(json!({ "polynomial": f.to_string(), "compact": f.compact().map_err(err)? }))
}

/// Irreducible counts for degrees `1..=max_degree`, with the polynomials
/// themselves for degrees whose search space is small.
pub fn census_json(p: u64, tower: &str, max_degree: u64) -> Result<String, String> {
    if !(1..=MAX_DEGREE).contains(&max_degree) {
        return Err(format!("degree must be between 1 and {MAX_DEGREE}"));
    }
    let field = field_from(p, tower)?;
    let q = field.size();
    let mut rows = Vec::new();
    for d in 1..=max_degree {
        let count = count_moebius(q, d).map_err(err)?;
        let listed = match checked_pow(q, d, "census") {
            Ok(total) if total <= LIST_LIMIT => Some(
                enumerate_irreducibles(&field, d)
                    .map_err(err)?
                    .iter()
                    .map(poly_value)
                    .collect::<Result<Vec<_>, _>>()?,
            ),
            _ => None,
        };
        rows.push(json!({ "degree": d, "count": count.to_string(), "polynomials": listed }));
    }
    Ok(json!({ "q": q, "field": field.descriptor(), "rows": rows }).to_string())
}

/// GF(p^n) from the lexicographically first irreducible, with its addition
/// and multiplication tables when it is small.
pub fn field_json(p: u64, n: u64) -> Result<String, String> {
    let base = PrimeField::new(p).map_err(err)?;
    match checked_pow(p, n, "field") {
        Ok(size) if n >= 1 && size <= FIELD_LIMIT => {}
        _ => return Err(format!("need n >= 1 and p^n <= {FIELD_LIMIT}")),
    }
    let modulus =
        extension::find_irreducible(&base, n, SearchStrategy::LexicographicFirst).map_err(err)?;
    let field: AnyField = extension::build_extension(&base, &modulus)
        .map_err(err)?
        .into();
    let q = field.size();
    let axioms = extension::verify_field_axioms(&field, 256, 2000, 0);

    let mut result = json!({
        "modulus": poly_value(&modulus)?,
        "size": q,
        "axioms_passed": axioms.passed,
        "axioms_exhaustive": axioms.exhaustive,
    });
    if q <= TABLE_LIMIT {
        let labels: Vec<String> = (0..q).map(|a| field.format_elem(a)).collect();
        let table = |op: &dyn Fn(u64, u64) -> u64| -> Vec<Vec<u64>> {
            (0..q).map(|a| (0..q).map(|b| op(a, b)).collect()).collect()
        };
        let inverses: Vec<Option<u64>> = (0..q).map(|a| field.inv(a).ok()).collect();
        result["elements"] = json!(labels);
        result["add"] = json!(table(&|a, b| field.add(a, b)));
        result["mul"] = json!(table(&|a, b| field.mul(a, b)));
        result["inverses"] = json!(inverses);
    }
    Ok(result.to_string())
}

/// Prime factorization of C(2N, N) and the smallest prime in (N, 2N].
pub fn binomial_json(n: u64) -> Result<String, String> {
    if !(1..=5000).contains(&n) {
        return Err("N must be between 1 and 5000".into());
    }
    let profile = bertrand::valuation_profile(n).map_err(err)?;
    let witness = bertrand::find_bertrand_witness(n).map_err(err)?;
    let bounds = bertrand::central_binomial_bounds(n).map_err(err)?;
    let power_bound = arith::primes_up_to(2 * n)
        .into_iter()
        .try_fold(true, |ok, p| {
            bertrand::check_prime_power_bound(n, p).map(|b| ok && b)
        })
        .map_err(err)?;
    Ok(json!({
        "profile": profile,
        "witness": witness.witness,
        "bounds_hold": bounds.passed,
        "prime_powers_at_most_2n": power_bound,
    })
    .to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn census(p: u32, tower: &str, max_degree: u32) -> Result<String, JsError> {
    js(census_json(p.into(), tower, max_degree.into()))
}

#[wasm_bindgen]
pub fn field(p: u32, n: u32) -> Result<String, JsError> {
    js(field_json(p.into(), n.into()))
}

#[wasm_bindgen]
pub fn binomial(n: u32) -> Result<String, JsError> {
    js(binomial_json(n.into()))
}
