//! `GF(q0^n)` as the quotient ring `K[x]/(P)` for a monic irreducible `P` of
//! degree `n` over a realized field `K` of size `q0`, together with the
//! irreducible search that supplies `P` and exhaustive correctness checks.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::checked_pow;
use crate::field::{AnyField, CoefficientField, FieldDescriptor};
use crate::irreducibles::{find_small_factor, is_irreducible_fast};
use crate::poly::{monic_at, monic_count, Degree, Poly};
use crate::{Error, Result};

/// Fields up to this size precompute their multiplication table.
pub const MUL_CACHE_LIMIT: u64 = 256;

/// Witness search for a reducible modulus scans at most this many candidates.
const WITNESS_SEARCH_LIMIT: u64 = 1 << 16;

/// An element of an [`ExtensionField`], by canonical index: the base-`q0`
/// digits of the index are the residue polynomial's coefficient indices,
/// lowest degree first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtElement(pub u64);

struct Inner {
    base: AnyField,
    modulus: Poly<AnyField>,
    degree: u32,
    size: u64,
    level: u32,
    mul_table: Option<Vec<u32>>,
}

/// The quotient `base[x]/(modulus)`; immutable and cheap to clone.
#[derive(Clone)]
pub struct ExtensionField(Arc<Inner>);

impl PartialEq for ExtensionField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.base == other.0.base && self.0.modulus == other.0.modulus)
    }
}

impl fmt::Debug for ExtensionField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExtensionField")
            .field("size", &self.0.size)
            .field("modulus", &self.0.modulus)
            .finish()
    }
}

impl ExtensionField {
    pub fn base(&self) -> &AnyField {
        &self.0.base
    }

    pub fn modulus(&self) -> &Poly<AnyField> {
        &self.0.modulus
    }

    /// Degree of the modulus, i.e. the dimension over the base.
    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    /// The base-field element `c` as an element of this field.
    pub fn embed(&self, c: u64) -> ExtElement {
        ExtElement(c)
    }

    /// Residue polynomial of an element, coefficient indices lowest first.
    pub fn residue_digits(&self, a: ExtElement) -> Vec<u64> {
        let q0 = self.0.base.size();
        let mut rest = a.0;
        (0..self.0.degree)
            .map(|_| {
                let digit = rest % q0;
                rest /= q0;
                digit
            })
            .collect()
    }

    pub fn residue(&self, a: ExtElement) -> Poly<AnyField> {
        Poly::from_coeffs(&self.0.base, self.residue_digits(a))
    }

    fn encode(&self, residue: &Poly<AnyField>) -> ExtElement {
        let q0 = self.0.base.size();
        ExtElement(
            residue
                .coeffs()
                .iter()
                .rev()
                .fold(0u64, |acc, &c| acc * q0 + c),
        )
    }

    fn mul_uncached(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        let product = self
            .residue(a)
            .mul(&self.residue(b))
            .and_then(|p| p.rem(&self.0.modulus))
            .expect("residues share the base field");
        self.encode(&product)
    }

    pub fn has_mul_cache(&self) -> bool {
        self.0.mul_table.is_some()
    }

    fn var_name(&self) -> char {
        char::from(b'a' + (self.0.level - 1).min(25) as u8)
    }
}

impl CoefficientField for ExtensionField {
    type Elem = ExtElement;

    fn size(&self) -> u64 {
        self.0.size
    }
    fn characteristic(&self) -> u64 {
        self.0.base.characteristic()
    }
    fn zero(&self) -> ExtElement {
        ExtElement(0)
    }
    fn one(&self) -> ExtElement {
        ExtElement(1)
    }
    fn add(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        let base = &self.0.base;
        let q0 = base.size();
        let (mut x, mut y) = (a.0, b.0);
        let (mut out, mut place) = (0u64, 1u64);
        for _ in 0..self.0.degree {
            out += base.add(x % q0, y % q0) * place;
            x /= q0;
            y /= q0;
            place = place.wrapping_mul(q0);
        }
        ExtElement(out)
    }
    fn sub(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        self.add(a, self.neg(b))
    }
    fn mul(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        match &self.0.mul_table {
            Some(table) => ExtElement(u64::from(table[(a.0 * self.0.size + b.0) as usize])),
            None => self.mul_uncached(a, b),
        }
    }
    fn neg(&self, a: ExtElement) -> ExtElement {
        let base = &self.0.base;
        let q0 = base.size();
        let mut x = a.0;
        let (mut out, mut place) = (0u64, 1u64);
        for _ in 0..self.0.degree {
            out += base.neg(x % q0) * place;
            x /= q0;
            place = place.wrapping_mul(q0);
        }
        ExtElement(out)
    }
    fn inv(&self, a: ExtElement) -> Result<ExtElement> {
        if a.0 == 0 {
            return Err(Error::InversionOfZero);
        }
        let (g, s, _) = self.residue(a).xgcd(&self.0.modulus)?;
        if !g.is_one() {
            return Err(Error::InvariantViolation(
                "nonzero residue shares a factor with the modulus".into(),
            ));
        }
        Ok(self.encode(&s.rem(&self.0.modulus)?))
    }
    fn element(&self, index: u64) -> Result<ExtElement> {
        if index >= self.0.size {
            return Err(Error::IndexOutOfRange {
                index,
                size: self.0.size,
            });
        }
        Ok(ExtElement(index))
    }
    fn index_of(&self, a: ExtElement) -> u64 {
        a.0
    }
    fn descriptor(&self) -> FieldDescriptor {
        let mut desc = self.0.base.descriptor();
        desc.tower
            .push(self.0.modulus.compact().expect("modulus is monic"));
        desc.size = self.0.size;
        desc.degree_over_prime *= self.0.degree;
        desc
    }
    fn format_elem(&self, a: ExtElement) -> String {
        let base = &self.0.base;
        let var = self.var_name();
        let nested = matches!(base, AnyField::Extension(_));
        let digits = self.residue_digits(a);
        let terms: Vec<String> = digits
            .iter()
            .enumerate()
            .rev()
            .filter(|&(_, &c)| c != 0)
            .map(|(i, &c)| {
                let coeff = base.format_elem(c);
                let coeff = if nested { format!("({coeff})") } else { coeff };
                match (i, c == 1) {
                    (0, _) => coeff,
                    (1, true) => var.to_string(),
                    (1, false) => format!("{coeff}{var}"),
                    (_, true) => format!("{var}^{i}"),
                    (_, false) => format!("{coeff}{var}^{i}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// How [`find_irreducible`] walks the monic polynomials of the target degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum SearchStrategy {
    /// First irreducible in canonical enumeration order.
    #[default]
    LexicographicFirst,
    /// Seeded ChaCha8 draws; falls back to a cyclic scan from the last draw.
    RandomWithSeed { seed: u64 },
}

fn irreducible_degree_one<K: CoefficientField>(field: &K) -> Poly<K> {
    Poly::x(field)
}

/// A monic irreducible of degree `n` over `field`.
///
/// Existence is guaranteed for every `n >= 1`; running out of candidates is
/// reported as an invariant violation.
pub fn find_irreducible<K: CoefficientField>(
    field: &K,
    n: u64,
    strategy: SearchStrategy,
) -> Result<Poly<K>> {
    if n == 0 {
        return Err(Error::InvalidInput(
            "irreducibles have degree at least 1".into(),
        ));
    }
    let d = n as usize;
    if d == 1 && strategy == SearchStrategy::LexicographicFirst {
        return Ok(irreducible_degree_one(field));
    }
    let total = monic_count(field, d).ok();
    let exhausted = || {
        Error::InvariantViolation(format!(
            "no monic irreducible of degree {n} over a field of size {}",
            field.size()
        ))
    };
    match strategy {
        SearchStrategy::LexicographicFirst => {
            let end = total.unwrap_or(u64::MAX);
            for i in 0..end {
                let f = monic_at(field, d, i)?;
                if is_irreducible_fast(&f)? {
                    return Ok(f);
                }
            }
            Err(exhausted())
        }
        SearchStrategy::RandomWithSeed { seed } => {
            let total = total.ok_or(Error::Overflow("find_irreducible"))?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut start = 0;
            for _ in 0..64 * n {
                start = rng.random_range(0..total);
                let f = monic_at(field, d, start)?;
                if is_irreducible_fast(&f)? {
                    return Ok(f);
                }
            }
            for offset in 1..total {
                let f = monic_at(field, d, (start + offset) % total)?;
                if is_irreducible_fast(&f)? {
                    return Ok(f);
                }
            }
            Err(exhausted())
        }
    }
}

/// Builds `base[x]/(modulus)`.
///
/// The modulus must be monic and irreducible; a reducible modulus is rejected
/// with a factor as witness when one can be found cheaply.
pub fn build_extension<K>(base: &K, modulus: &Poly<K>) -> Result<ExtensionField>
where
    K: CoefficientField + Into<AnyField>,
{
    let n = match modulus.degree() {
        Degree::Finite(n) if n >= 1 => n,
        _ => {
            return Err(Error::ConstantModulus {
                op: "build_extension",
            })
        }
    };
    if modulus.field() != base {
        return Err(Error::MixedFields);
    }
    if !modulus.is_monic() {
        return Err(Error::NotMonic {
            op: "build_extension",
        });
    }
    if !is_irreducible_fast(modulus)? {
        let witness = match checked_pow(base.size(), (n / 2) as u64, "witness") {
            Ok(c) if c <= WITNESS_SEARCH_LIMIT => {
                find_small_factor(modulus)?.map(|f| f.compact().expect("monic factor"))
            }
            _ => None,
        };
        return Err(Error::ReducibleModulus { witness });
    }
    let size = checked_pow(base.size(), n as u64, "build_extension")?;
    let any: AnyField = base.clone().into();
    let level = match &any {
        AnyField::Prime(_) => 1,
        AnyField::Extension(e) => e.0.level + 1,
    };
    let modulus = Poly::from_indices(&any, &modulus.coeff_indices())?;
    let mut field = ExtensionField(Arc::new(Inner {
        base: any,
        modulus,
        degree: n as u32,
        size,
        level,
        mul_table: None,
    }));
    if size <= MUL_CACHE_LIMIT {
        let table = (0..size)
            .flat_map(|a| (0..size).map(move |b| (a, b)))
            .map(|(a, b)| field.mul_uncached(ExtElement(a), ExtElement(b)).0 as u32)
            .collect();
        Arc::get_mut(&mut field.0)
            .expect("freshly built field is unshared")
            .mul_table = Some(table);
    }
    Ok(field)
}

/// `GF(p^n)` over `F_p` using the lexicographically first irreducible.
pub fn galois_field(p: u64, n: u64) -> Result<ExtensionField> {
    let base = crate::PrimeField::new(p)?;
    let modulus = find_irreducible(&base, n, SearchStrategy::LexicographicFirst)?;
    build_extension(&base, &modulus)
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub size: u64,
    pub exhaustive: bool,
    /// Sampled triples when not exhaustive.
    pub samples: u64,
    pub checks: Vec<CheckOutcome>,
    pub passed: bool,
}

struct Checker {
    checks: Vec<CheckOutcome>,
}

impl Checker {
    fn record(&mut self, name: &'static str, counterexample: Option<String>) {
        self.checks.push(CheckOutcome {
            name,
            passed: counterexample.is_none(),
            counterexample,
        });
    }
}

/// Tabulated operations on element indices.
struct Tables {
    q: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
}

impl Tables {
    fn build<K: CoefficientField>(field: &K) -> Self {
        let q = field.size() as usize;
        let elems = field.elements();
        let mut add = Vec::with_capacity(q * q);
        let mut mul = Vec::with_capacity(q * q);
        for &a in &elems {
            for &b in &elems {
                add.push(field.index_of(field.add(a, b)) as u32);
                mul.push(field.index_of(field.mul(a, b)) as u32);
            }
        }
        Self { q, add, mul }
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }
}

fn exhaustive_axioms<K: CoefficientField>(field: &K) -> Vec<CheckOutcome> {
    let t = Tables::build(field);
    let q = t.q;
    let mut c = Checker { checks: Vec::new() };
    let first = |pred: &dyn Fn(usize) -> Option<String>| (0..q).find_map(pred);

    c.record(
        "closure",
        t.add
            .iter()
            .chain(&t.mul)
            .find(|&&v| v as usize >= q)
            .map(|v| format!("index {v}")),
    );
    c.record(
        "additive identity",
        first(&|a| (t.add(a, 0) != a).then(|| format!("a={a}"))),
    );
    c.record(
        "multiplicative identity",
        first(&|a| (t.mul(a, 1) != a).then(|| format!("a={a}"))),
    );
    c.record(
        "additive inverses",
        first(&|a| {
            let e = field.element(a as u64).expect("in range");
            let n = field.index_of(field.neg(e)) as usize;
            (t.add(a, n) != 0).then(|| format!("a={a}"))
        }),
    );
    c.record(
        "multiplicative inverses",
        first(&|a| {
            let e = field.element(a as u64).expect("in range");
            match field.inv(e) {
                Err(Error::InversionOfZero) if a == 0 => None,
                Ok(_) if a == 0 => Some("zero was inverted".into()),
                Ok(i) if t.mul(a, field.index_of(i) as usize) == 1 => None,
                _ => Some(format!("a={a}")),
            }
        }),
    );
    c.record(
        "commutativity",
        first(&|a| {
            (0..q)
                .find(|&b| t.add(a, b) != t.add(b, a) || t.mul(a, b) != t.mul(b, a))
                .map(|b| format!("a={a} b={b}"))
        }),
    );
    let triple = |pred: &dyn Fn(usize, usize, usize) -> bool| {
        (0..q).find_map(|a| {
            (0..q).find_map(|b| {
                (0..q)
                    .find(|&cc| !pred(a, b, cc))
                    .map(|cc| format!("a={a} b={b} c={cc}"))
            })
        })
    };
    c.record(
        "additive associativity",
        triple(&|a, b, cc| t.add(t.add(a, b), cc) == t.add(a, t.add(b, cc))),
    );
    c.record(
        "multiplicative associativity",
        triple(&|a, b, cc| t.mul(t.mul(a, b), cc) == t.mul(a, t.mul(b, cc))),
    );
    c.record(
        "distributivity",
        triple(&|a, b, cc| t.mul(a, t.add(b, cc)) == t.add(t.mul(a, b), t.mul(a, cc))),
    );
    c.checks
}

fn sampled_axioms<K: CoefficientField>(field: &K, samples: u64, seed: u64) -> Vec<CheckOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = field.size();
    let mut pick = || field.element(rng.random_range(0..q)).expect("in range");
    let mut c = Checker { checks: Vec::new() };
    let (zero, one) = (field.zero(), field.one());
    let mut failures: [Option<String>; 5] = Default::default();
    for _ in 0..samples {
        let (a, b, cc) = (pick(), pick(), pick());
        let show = || {
            format!(
                "a={} b={} c={}",
                field.index_of(a),
                field.index_of(b),
                field.index_of(cc)
            )
        };
        let checks = [
            field.add(a, zero) == a && field.mul(a, one) == a && field.add(a, field.neg(a)) == zero,
            field.add(a, b) == field.add(b, a) && field.mul(a, b) == field.mul(b, a),
            field.add(field.add(a, b), cc) == field.add(a, field.add(b, cc))
                && field.mul(field.mul(a, b), cc) == field.mul(a, field.mul(b, cc)),
            field.mul(a, field.add(b, cc)) == field.add(field.mul(a, b), field.mul(a, cc)),
            field.is_zero(a) || field.inv(a).is_ok_and(|i| field.mul(a, i) == one),
        ];
        for (slot, ok) in failures.iter_mut().zip(checks) {
            if !ok && slot.is_none() {
                *slot = Some(show());
            }
        }
    }
    let names = [
        "identities and additive inverses",
        "commutativity",
        "associativity",
        "distributivity",
        "multiplicative inverses",
    ];
    for (name, failure) in names.into_iter().zip(failures) {
        c.record(name, failure);
    }
    c.record(
        "zero is not invertible",
        (field.inv(zero) != Err(Error::InversionOfZero)).then(|| "inv(0) accepted".into()),
    );
    c.checks
}

/// Field axioms, exhaustive over all pairs and triples when the field has at
/// most `exhaustive_limit` elements, otherwise on `samples` seeded triples.
pub fn verify_field_axioms<K: CoefficientField>(
    field: &K,
    exhaustive_limit: u64,
    samples: u64,
    seed: u64,
) -> AxiomReport {
    let exhaustive = field.size() <= exhaustive_limit;
    let checks = if exhaustive {
        exhaustive_axioms(field)
    } else {
        sampled_axioms(field, samples, seed)
    };
    AxiomReport {
        size: field.size(),
        exhaustive,
        samples: if exhaustive { 0 } else { samples },
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrobeniusReport {
    pub size: u64,
    pub base_size: u64,
    pub characteristic: u64,
    /// Number of `a` with `a^(q0) = a`.
    pub base_fixed_points: u64,
    /// Number of `a` with `a^p = a`.
    pub prime_fixed_points: u64,
    pub checks: Vec<CheckOutcome>,
    pub passed: bool,
}

/// Exhaustive Frobenius checks on a field of size `q = q0^n` over a base of
/// size `q0`: additivity of `a -> a^(q0)`, `a^q = a` for every `a`, and the
/// fixed points of `a -> a^(q0)` being exactly the embedded base field.
pub fn frobenius_check(field: &AnyField, exhaustive_limit: u64) -> Result<FrobeniusReport> {
    let q = field.size();
    if q > exhaustive_limit {
        return Err(Error::BudgetExceeded {
            what: "frobenius check",
            needed: q.to_string(),
            limit: exhaustive_limit,
        });
    }
    let q0 = field.base_size();
    let p = field.characteristic();
    let frob: Vec<u64> = (0..q).map(|a| field.pow(a, q0)).collect();
    let mut c = Checker { checks: Vec::new() };
    c.record(
        "frobenius is additive",
        (0..q).find_map(|a| {
            (0..q)
                .find(|&b| {
                    frob[field.add(a, b) as usize] != field.add(frob[a as usize], frob[b as usize])
                })
                .map(|b| format!("a={a} b={b}"))
        }),
    );
    c.record(
        "a^q = a",
        (0..q)
            .find(|&a| field.pow(a, q) != a)
            .map(|a| format!("a={a}")),
    );
    // In canonical index order the embedded base field is exactly 0..q0.
    let fixed: BTreeSet<u64> = (0..q).filter(|&a| frob[a as usize] == a).collect();
    let base_image: BTreeSet<u64> = (0..q0).collect();
    c.record(
        "fixed points of a^(q0) are the base field",
        (fixed != base_image).then(|| format!("{} fixed points", fixed.len())),
    );
    let prime_fixed = (0..q).filter(|&a| field.pow(a, p) == a).count() as u64;
    c.record(
        "fixed points of a^p number p",
        (prime_fixed != p).then(|| format!("{prime_fixed} fixed points")),
    );
    Ok(FrobeniusReport {
        size: q,
        base_size: q0,
        characteristic: p,
        base_fixed_points: fixed.len() as u64,
        prime_fixed_points: prime_fixed,
        passed: c.checks.iter().all(|x| x.passed),
        checks: c.checks,
    })
}
