//! The product `F(n)` of all monic polynomials of degree `n`, and exact checks
//! of the identities built on it:
//!
//! * `F(n) / F(n-1)^q` equals the product of the monic irreducibles whose
//!   degree divides `n`, and equals `x^(q^n) - x`;
//! * the exponent of an irreducible `P` of degree `d` in `F(n)` is
//!   `Σ_{k>=1, kd<=n} q^(n-kd)`;
//! * the degree inequality `q^n >= 2⌊n/2⌋ q^⌊n/2⌋` behind the existence
//!   argument.

use serde::Serialize;

use crate::arith::{self, checked_pow, nat_decimal, pow_nat, Nat};
use crate::field::CoefficientField;
use crate::irreducibles::{is_irreducible_fast, IrreducibleCensus};
use crate::poly::{enumerate_monic, Degree, Poly};
use crate::{Error, Result};

/// Default cap on the degree `n q^n` of `F(n)`.
pub const DEFAULT_DEGREE_BUDGET: u64 = 20_000;

fn product_tree<K: CoefficientField>(field: &K, mut layer: Vec<Poly<K>>) -> Result<Poly<K>> {
    if layer.is_empty() {
        return Ok(Poly::one(field));
    }
    while layer.len() > 1 {
        let mut next = Vec::with_capacity(layer.len().div_ceil(2));
        let mut it = layer.into_iter();
        while let Some(a) = it.next() {
            next.push(match it.next() {
                Some(b) => a.mul(&b)?,
                None => a,
            });
        }
        layer = next;
    }
    Ok(layer.pop().expect("nonempty layer"))
}

fn poly_pow<K: CoefficientField>(base: &Poly<K>, mut exp: u64) -> Result<Poly<K>> {
    let mut acc = Poly::one(base.field());
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc.mul(&sq)?;
        }
        exp >>= 1;
        if exp > 0 {
            sq = sq.mul(&sq)?;
        }
    }
    Ok(acc)
}

fn degree_needed(q: u64, n: u64, what: &'static str, budget: u64) -> Result<u64> {
    let needed = checked_pow(q, n, what)
        .ok()
        .and_then(|v| v.checked_mul(n.max(1)));
    match needed {
        Some(d) if d <= budget => Ok(d),
        _ => Err(Error::BudgetExceeded {
            what,
            needed: (pow_nat(q, n) * n.max(1)).to_string(),
            limit: budget,
        }),
    }
}

/// `F(n)`: the product of all `q^n` monic polynomials of degree `n`, of degree
/// `n q^n`. The product is accumulated as a balanced tree over the canonical
/// enumeration.
pub fn big_product<K: CoefficientField>(field: &K, n: u64, budget: u64) -> Result<Poly<K>> {
    degree_needed(field.size(), n, "F(n)", budget)?;
    product_tree(field, enumerate_monic(field, n as usize)?)
}

/// `F(n) / F(n-1)^q`, with the division checked to be exact.
pub fn quotient<K: CoefficientField>(field: &K, n: u64, budget: u64) -> Result<Poly<K>> {
    if n == 0 {
        return Err(Error::ZeroArgument { op: "quotient" });
    }
    let fn_ = big_product(field, n, budget)?;
    let prev = big_product(field, n - 1, budget)?;
    fn_.div_exact(&poly_pow(&prev, field.size())?)
}

/// Product of the monic irreducibles whose degree divides `n`.
pub fn rhs_product<K: CoefficientField>(
    field: &K,
    n: u64,
    census: &IrreducibleCensus,
) -> Result<Poly<K>> {
    let mut factors = Vec::new();
    for d in arith::divisors(n)? {
        factors.extend(census.polynomials(field, d)?);
    }
    product_tree(field, factors)
}

/// `x^(q^n) - x`.
pub fn xqn_minus_x<K: CoefficientField>(field: &K, n: u64, budget: u64) -> Result<Poly<K>> {
    let qn = checked_pow(field.size(), n, "x^(q^n) - x")
        .ok()
        .filter(|&d| d <= budget)
        .ok_or_else(|| Error::BudgetExceeded {
            what: "x^(q^n) - x",
            needed: pow_nat(field.size(), n).to_string(),
            limit: budget,
        })?;
    let lead = Poly::monomial(field, field.one(), qn as usize);
    lead.sub(&Poly::x(field))
}

/// Largest `k` with `p^k | f`, by repeated division.
pub fn valuation_direct<K: CoefficientField>(p: &Poly<K>, f: &Poly<K>) -> Result<u64> {
    if f.is_zero() {
        return Err(Error::InvalidInput(
            "valuation of the zero polynomial".into(),
        ));
    }
    if !is_irreducible_fast(p)? {
        return Err(Error::ReducibleModulus { witness: None });
    }
    let mut k = 0;
    let mut rest = f.clone();
    loop {
        let (q, r) = rest.divmod(p)?;
        if !r.is_zero() {
            return Ok(k);
        }
        rest = q;
        k += 1;
    }
}

/// `Σ_{k>=1} ⌊q^(n-kd)⌋`; terms with `kd > n` are zero and omitted.
pub fn valuation_formula(d: u64, n: u64, q: u64) -> Result<Nat> {
    if d == 0 {
        return Err(Error::ZeroArgument {
            op: "valuation_formula",
        });
    }
    Ok((1..=n / d).map(|k| pow_nat(q, n - k * d)).sum())
}

/// Per-irreducible exponent comparison inside an [`IdentityReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValuationRow {
    pub polynomial: String,
    pub compact: String,
    pub degree: u64,
    /// Exponent in `F(n)` by repeated division.
    pub direct: u64,
    /// Exponent in `F(n)` from the closed formula.
    #[serde(with = "nat_decimal")]
    pub formula: Nat,
    /// Exponent in the quotient `F(n) / F(n-1)^q`.
    pub in_quotient: u64,
    /// 1 if the degree divides `n`, else 0.
    pub expected_in_quotient: u64,
}

impl ValuationRow {
    pub fn matches(&self) -> bool {
        Nat::from(self.direct) == self.formula && self.in_quotient == self.expected_in_quotient
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub q: u64,
    pub n: u64,
    pub field: crate::FieldDescriptor,
    pub product_degree: u64,
    pub lhs_degree: u64,
    pub rhs_degree: u64,
    pub lhs_equals_rhs: bool,
    pub lhs_equals_xqn_minus_x: bool,
    pub degrees_as_claimed: bool,
    pub valuations: Vec<ValuationRow>,
    pub identity_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

fn finite_degree<K: CoefficientField>(f: &Poly<K>) -> u64 {
    match f.degree() {
        Degree::Finite(d) => d as u64,
        Degree::MinusInfinity => 0,
    }
}

/// Builds `F(n)`, the quotient and the irreducible product and compares them,
/// along with the exponent of every monic irreducible of degree at most `n`.
pub fn verify_identity<K: CoefficientField>(
    field: &K,
    n: u64,
    budget: u64,
) -> Result<IdentityReport> {
    if n == 0 {
        return Err(Error::ZeroArgument {
            op: "verify_identity",
        });
    }
    let q = field.size();
    let fn_full = big_product(field, n, budget)?;
    let lhs = quotient(field, n, budget)?;
    let census = IrreducibleCensus::enumerate_up_to(field, n)?;
    let rhs = rhs_product(field, n, &census)?;
    let target = xqn_minus_x(field, n, budget)?;

    let mut valuations = Vec::new();
    for d in 1..=n {
        for p in census.polynomials(field, d)? {
            let in_quotient = valuation_direct(&p, &lhs)?;
            valuations.push(ValuationRow {
                polynomial: p.to_string(),
                compact: p.compact()?,
                degree: d,
                direct: valuation_direct(&p, &fn_full)?,
                formula: valuation_formula(d, n, q)?,
                in_quotient,
                expected_in_quotient: u64::from(n.is_multiple_of(d)),
            });
        }
    }

    let qn = pow_nat(q, n);
    let product_degree = finite_degree(&fn_full);
    let lhs_degree = finite_degree(&lhs);
    let rhs_degree = finite_degree(&rhs);
    let degrees_as_claimed = Nat::from(product_degree) == &qn * n
        && Nat::from(lhs_degree) == qn
        && rhs_degree == lhs_degree;
    let lhs_equals_rhs = lhs == rhs;
    let lhs_equals_xqn_minus_x = lhs == target;

    let first_failure = if !lhs_equals_rhs {
        Some("F(n)/F(n-1)^q differs from the irreducible product".to_string())
    } else if !lhs_equals_xqn_minus_x {
        Some("F(n)/F(n-1)^q differs from x^(q^n) - x".to_string())
    } else if !degrees_as_claimed {
        Some(format!(
            "degrees: F(n) {product_degree}, quotient {lhs_degree}, product {rhs_degree}"
        ))
    } else {
        valuations
            .iter()
            .find(|v| !v.matches())
            .map(|v| format!("valuation mismatch at {}", v.polynomial))
    };

    Ok(IdentityReport {
        q,
        n,
        field: field.descriptor(),
        product_degree,
        lhs_degree,
        rhs_degree,
        lhs_equals_rhs,
        lhs_equals_xqn_minus_x,
        degrees_as_claimed,
        identity_holds: first_failure.is_none(),
        first_failure,
        valuations,
    })
}

/// Whether `q^n >= 2⌊n/2⌋ q^⌊n/2⌋`, for `q >= 2`, `n >= 2`.
pub fn verify_degree_bound(q: u64, n: u64) -> bool {
    degree_bound_chain(q, n).target_holds
}

/// The quantities in the degree argument for one `(q, n)`, `n >= 2`: the
/// total degree of all monic polynomials of degree at most `⌊n/2⌋`, the
/// bound `2⌊n/2⌋q^⌊n/2⌋` it stays below, and `q^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeBoundChain {
    pub q: u64,
    pub n: u64,
    #[serde(with = "nat_decimal")]
    pub small_degree_mass: Nat,
    #[serde(with = "nat_decimal")]
    pub bound: Nat,
    #[serde(with = "nat_decimal")]
    pub qn: Nat,
    /// `small_degree_mass < bound`.
    pub mass_below_bound: bool,
    /// `q^n >= bound`.
    pub target_holds: bool,
}

pub fn degree_bound_chain(q: u64, n: u64) -> DegreeBoundChain {
    let half = n / 2;
    let small_degree_mass: Nat = (1..=half).map(|d| pow_nat(q, d) * d).sum();
    let bound = pow_nat(q, half) * (2 * half);
    let qn = pow_nat(q, n);
    DegreeBoundChain {
        q,
        n,
        mass_below_bound: small_degree_mass < bound,
        target_holds: qn >= bound,
        small_degree_mass,
        bound,
        qn,
    }
}
