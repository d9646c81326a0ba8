//! Irreducibility tests, enumeration of monic irreducibles, and the two
//! counting routes (census by enumeration and the Möbius-inverted formula),
//! tied together by Gauss's relation `q^n = Σ_{d|n} d·π(d)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{self, nat_decimal, pow_nat, Nat};
use crate::field::CoefficientField;
use crate::poly::{monic_at, monic_count, monic_iter, Degree, Poly};
use crate::{Error, Result};

/// Degrees with at most this many monic candidates keep their full list of
/// irreducibles in a census; larger degrees keep counts only.
pub const LIST_LIMIT: u64 = 1 << 16;

/// Largest number of monic candidates a census will scan for one degree.
pub const ENUMERATION_LIMIT: u64 = 1 << 22;

fn nonconstant_degree<K: CoefficientField>(f: &Poly<K>, op: &'static str) -> Result<usize> {
    match f.degree() {
        Degree::Finite(d) if d >= 1 => Ok(d),
        _ => Err(Error::ConstantPolynomial { op }),
    }
}

/// A monic factor of degree in `[1, ⌊deg f / 2⌋]`, found by trial division
/// over the canonical monic enumeration, or `None` if `f` is irreducible.
pub fn find_small_factor<K: CoefficientField>(f: &Poly<K>) -> Result<Option<Poly<K>>> {
    let n = nonconstant_degree(f, "find_small_factor")?;
    for d in 1..=n / 2 {
        for g in monic_iter(f.field(), d)? {
            if g.divides(f)? {
                return Ok(Some(g));
            }
        }
    }
    Ok(None)
}

/// Brute-force irreducibility: no monic polynomial of degree at most half the
/// degree of `f` divides it.
pub fn is_irreducible_oracle<K: CoefficientField>(f: &Poly<K>) -> Result<bool> {
    Ok(find_small_factor(f)?.is_none())
}

/// `x^(q^k) mod f` for `k = 0..=n`, by repeated `q`-th powering.
fn frobenius_orbit<K: CoefficientField>(f: &Poly<K>, n: usize) -> Result<Vec<Poly<K>>> {
    let q = Nat::from(f.field().size());
    let mut orbit = Vec::with_capacity(n + 1);
    orbit.push(Poly::x(f.field()).rem(f)?);
    for k in 0..n {
        let next = orbit[k].powmod(&q, f)?;
        orbit.push(next);
    }
    Ok(orbit)
}

/// Rabin's test: `f` of degree `n` is irreducible iff `x^(q^n) ≡ x (mod f)`
/// and `gcd(x^(q^(n/l)) - x, f) = 1` for every prime `l | n`.
pub fn is_irreducible_fast<K: CoefficientField>(f: &Poly<K>) -> Result<bool> {
    let n = nonconstant_degree(f, "is_irreducible_fast")?;
    if !f.is_monic() {
        return Err(Error::NotMonic {
            op: "is_irreducible_fast",
        });
    }
    if n == 1 {
        return Ok(true);
    }
    let orbit = frobenius_orbit(f, n)?;
    let x = &orbit[0];
    if orbit[n] != *x {
        return Ok(false);
    }
    for l in arith::prime_divisors(n as u64)? {
        let h = orbit[n / l as usize].sub(x)?;
        if !h.gcd(f)?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn irreducible_indices<K: CoefficientField>(field: &K, d: usize, count: u64) -> Result<Vec<u64>> {
    let hits: Vec<Result<Option<u64>>> = (0..count)
        .into_par_iter()
        .map(|i| {
            let f = monic_at(field, d, i)?;
            Ok(is_irreducible_fast(&f)?.then_some(i))
        })
        .collect();
    hits.into_iter().filter_map(Result::transpose).collect()
}

/// All monic irreducibles of degree `d`, in canonical order.
pub fn enumerate_irreducibles<K: CoefficientField>(field: &K, d: u64) -> Result<Vec<Poly<K>>> {
    if d == 0 {
        return Err(Error::InvalidInput(
            "irreducibles have degree at least 1".into(),
        ));
    }
    let d = d as usize;
    let count = monic_count(field, d)?;
    if count > ENUMERATION_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "irreducible enumeration",
            needed: count.to_string(),
            limit: ENUMERATION_LIMIT,
        });
    }
    irreducible_indices(field, d, count)?
        .into_iter()
        .map(|i| monic_at(field, d, i))
        .collect()
}

fn require_prime_power(q: u64) -> Result<()> {
    arith::prime_power_parts(q)
        .map(|_| ())
        .ok_or(Error::NotPrimePower(q))
}

/// `π(n) = (1/n) Σ_{d|n} μ(d) q^(n/d)`; the sum is checked to be divisible
/// by `n` before dividing.
pub fn count_moebius(q: u64, n: u64) -> Result<Nat> {
    require_prime_power(q)?;
    if n == 0 {
        return Err(Error::ZeroArgument {
            op: "count_moebius",
        });
    }
    let mut sum = BigInt::zero();
    for d in arith::divisors(n)? {
        let mu = arith::moebius(d)?;
        if mu != 0 {
            sum += BigInt::from(mu) * BigInt::from(pow_nat(q, n / d));
        }
    }
    let (quot, rem) = sum.div_rem(&BigInt::from(n));
    if !rem.is_zero() || quot.is_negative() {
        return Err(Error::InvariantViolation(format!(
            "Möbius sum {sum} for q={q}, n={n} is not a non-negative multiple of {n}"
        )));
    }
    Ok(quot.magnitude().clone())
}

/// Where a census count came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CountSource {
    Enumeration,
    Moebius,
    Supplied,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    pub count: Nat,
    pub source: CountSource,
    /// Canonical monic indices of the irreducibles, when retained.
    pub indices: Option<Vec<u64>>,
}

/// Per-degree counts `π(d)` of monic irreducibles over a field of size `q`,
/// with the polynomials themselves for small degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleCensus {
    q: u64,
    by_degree: BTreeMap<u64, CensusEntry>,
}

/// One exported census row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub degree: u64,
    #[serde(with = "nat_decimal")]
    pub count: Nat,
    pub source: CountSource,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomials: Option<Vec<String>>,
}

impl IrreducibleCensus {
    /// Empty census; useful for the trivial Euler product.
    pub fn empty(q: u64) -> Self {
        Self {
            q,
            by_degree: BTreeMap::new(),
        }
    }

    /// Census from externally supplied counts.
    pub fn from_counts(q: u64, counts: impl IntoIterator<Item = (u64, Nat)>) -> Self {
        let by_degree = counts
            .into_iter()
            .map(|(d, count)| {
                let entry = CensusEntry {
                    count,
                    source: CountSource::Supplied,
                    indices: None,
                };
                (d, entry)
            })
            .collect();
        Self { q, by_degree }
    }

    /// Counts from the Möbius formula for every degree in `1..=max_degree`.
    pub fn from_moebius(q: u64, max_degree: u64) -> Result<Self> {
        let mut census = Self::empty(q);
        for d in 1..=max_degree {
            census.by_degree.insert(
                d,
                CensusEntry {
                    count: count_moebius(q, d)?,
                    source: CountSource::Moebius,
                    indices: None,
                },
            );
        }
        Ok(census)
    }

    /// Census by exhaustive fast-test enumeration of each degree in `degrees`.
    pub fn enumerate<K: CoefficientField>(
        field: &K,
        degrees: impl IntoIterator<Item = u64>,
    ) -> Result<Self> {
        let mut census = Self::empty(field.size());
        for d in degrees {
            if d == 0 {
                return Err(Error::InvalidInput(
                    "irreducibles have degree at least 1".into(),
                ));
            }
            let count = monic_count(field, d as usize)?;
            if count > ENUMERATION_LIMIT {
                return Err(Error::BudgetExceeded {
                    what: "census enumeration",
                    needed: count.to_string(),
                    limit: ENUMERATION_LIMIT,
                });
            }
            let indices = irreducible_indices(field, d as usize, count)?;
            census.by_degree.insert(
                d,
                CensusEntry {
                    count: Nat::from(indices.len()),
                    source: CountSource::Enumeration,
                    indices: (count <= LIST_LIMIT).then_some(indices),
                },
            );
        }
        Ok(census)
    }

    pub fn enumerate_up_to<K: CoefficientField>(field: &K, max_degree: u64) -> Result<Self> {
        Self::enumerate(field, 1..=max_degree)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn degrees(&self) -> impl Iterator<Item = u64> + '_ {
        self.by_degree.keys().copied()
    }

    pub fn covers(&self, d: u64) -> bool {
        self.by_degree.contains_key(&d)
    }

    pub fn entry(&self, d: u64) -> Result<&CensusEntry> {
        self.by_degree
            .get(&d)
            .ok_or(Error::IncompleteCensus { degree: d })
    }

    pub fn count(&self, d: u64) -> Result<&Nat> {
        Ok(&self.entry(d)?.count)
    }

    /// The retained irreducibles of degree `d` as polynomials over `field`.
    pub fn polynomials<K: CoefficientField>(&self, field: &K, d: u64) -> Result<Vec<Poly<K>>> {
        if field.size() != self.q {
            return Err(Error::MixedFields);
        }
        let indices = self
            .entry(d)?
            .indices
            .as_ref()
            .ok_or(Error::CensusListMissing { degree: d })?;
        indices
            .iter()
            .map(|&i| monic_at(field, d as usize, i))
            .collect()
    }

    /// Export rows; polynomials are included (compact form) when `field` is
    /// given and the list was retained.
    pub fn rows<K: CoefficientField>(&self, field: Option<&K>) -> Result<Vec<CensusRow>> {
        self.by_degree
            .iter()
            .map(|(&degree, entry)| {
                let polynomials = match (field, &entry.indices) {
                    (Some(k), Some(_)) => Some(
                        self.polynomials(k, degree)?
                            .iter()
                            .map(Poly::compact)
                            .collect::<Result<Vec<_>>>()?,
                    ),
                    _ => None,
                };
                Ok(CensusRow {
                    degree,
                    count: entry.count.clone(),
                    source: entry.source,
                    polynomials,
                })
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaussTerm {
    pub d: u64,
    #[serde(with = "nat_decimal")]
    pub pi: Nat,
    #[serde(with = "nat_decimal")]
    pub contribution: Nat,
}

/// Both sides of `q^n = Σ_{d|n} d·π(d)` with the per-divisor terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaussReport {
    pub q: u64,
    pub n: u64,
    #[serde(with = "nat_decimal")]
    pub lhs: Nat,
    #[serde(with = "nat_decimal")]
    pub rhs: Nat,
    pub terms: Vec<GaussTerm>,
    pub holds: bool,
}

pub fn verify_gauss(q: u64, n: u64, census: &IrreducibleCensus) -> Result<GaussReport> {
    if census.q() != q {
        return Err(Error::MixedFields);
    }
    if n == 0 {
        return Err(Error::ZeroArgument { op: "verify_gauss" });
    }
    let mut terms = Vec::new();
    let mut rhs = Nat::zero();
    for d in arith::divisors(n)? {
        let pi = census.count(d)?.clone();
        let contribution = &pi * d;
        rhs += &contribution;
        terms.push(GaussTerm {
            d,
            pi,
            contribution,
        });
    }
    let lhs = pow_nat(q, n);
    Ok(GaussReport {
        q,
        n,
        holds: lhs == rhs,
        lhs,
        rhs,
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::enumerate_monic;
    use crate::PrimeField;

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn poly(k: &PrimeField, lo_first: &[u64]) -> Poly<PrimeField> {
        Poly::from_indices(k, lo_first).unwrap()
    }

    #[test]
    fn oracle_examples() {
        let k = fp(2);
        assert!(is_irreducible_oracle(&poly(&k, &[1, 1, 1])).unwrap());
        assert!(!is_irreducible_oracle(&poly(&k, &[1, 0, 1])).unwrap());
        for p in [2, 3, 5] {
            assert!(is_irreducible_oracle(&Poly::x(&fp(p))).unwrap());
        }
        assert_eq!(
            is_irreducible_oracle(&Poly::one(&k)),
            Err(Error::ConstantPolynomial {
                op: "find_small_factor"
            })
        );
        assert_eq!(
            find_small_factor(&poly(&k, &[1, 0, 1])).unwrap(),
            Some(poly(&k, &[1, 1]))
        );
    }

    #[test]
    fn fast_test_examples() {
        let k = fp(2);
        assert!(is_irreducible_fast(&poly(&k, &[1, 1, 0, 0, 1])).unwrap());
        assert!(!is_irreducible_fast(&poly(&k, &[1, 0, 1, 0, 1])).unwrap());
        assert!(is_irreducible_fast(&poly(&fp(3), &[2, 1])).unwrap());
        assert!(matches!(
            is_irreducible_fast(&poly(&fp(3), &[1, 2])),
            Err(Error::NotMonic { .. })
        ));
        assert!(matches!(
            is_irreducible_fast(&Poly::one(&k)),
            Err(Error::ConstantPolynomial { .. })
        ));
    }

    #[test]
    fn squared_irreducible_detected() {
        // (x^2+x+1)^2 = x^4+x^2+1 passes neither test.
        let k = fp(2);
        let q = poly(&k, &[1, 1, 1]);
        let sq = q.mul(&q).unwrap();
        assert_eq!(sq, poly(&k, &[1, 0, 1, 0, 1]));
        assert!(!is_irreducible_oracle(&sq).unwrap());
        assert!(!is_irreducible_fast(&sq).unwrap());
    }

    #[test]
    fn oracle_and_fast_agree_exhaustively() {
        for (p, max_deg) in [(2u64, 8usize), (3, 5)] {
            let k = fp(p);
            for d in 1..=max_deg {
                for f in enumerate_monic(&k, d).unwrap() {
                    assert_eq!(
                        is_irreducible_fast(&f).unwrap(),
                        is_irreducible_oracle(&f).unwrap(),
                        "{f} over F_{p}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let k = fp(2);
        let names = |d| -> Vec<String> {
            enumerate_irreducibles(&k, d)
                .unwrap()
                .iter()
                .map(ToString::to_string)
                .collect()
        };
        assert_eq!(names(1), ["x", "x + 1"]);
        assert_eq!(names(2), ["x^2 + x + 1"]);
        assert_eq!(
            names(4),
            ["x^4 + x + 1", "x^4 + x^3 + 1", "x^4 + x^3 + x^2 + x + 1"]
        );
        assert!(enumerate_irreducibles(&k, 0).is_err());
    }

    #[test]
    fn moebius_count_examples() {
        assert_eq!(count_moebius(2, 1).unwrap(), Nat::from(2u32));
        assert_eq!(count_moebius(2, 4).unwrap(), Nat::from(3u32));
        assert_eq!(count_moebius(3, 2).unwrap(), Nat::from(3u32));
        let first_eight: Vec<Nat> = (1..=8).map(|n| count_moebius(2, n).unwrap()).collect();
        let expected: Vec<Nat> = [2u32, 1, 2, 3, 6, 9, 18, 30].map(Nat::from).to_vec();
        assert_eq!(first_eight, expected);
        assert_eq!(count_moebius(6, 2), Err(Error::NotPrimePower(6)));
        assert!(count_moebius(2, 0).is_err());
    }

    #[test]
    fn census_matches_moebius() {
        for (p, max_n) in [(2u64, 10u64), (3, 6), (5, 6)] {
            let census = IrreducibleCensus::enumerate_up_to(&fp(p), max_n).unwrap();
            for n in 1..=max_n {
                assert_eq!(
                    census.count(n).unwrap(),
                    &count_moebius(p, n).unwrap(),
                    "q={p} n={n}"
                );
            }
        }
    }

    #[test]
    fn census_retains_small_lists_only() {
        let k = fp(2);
        let census = IrreducibleCensus::enumerate(&k, [4, 17]).unwrap();
        assert_eq!(census.polynomials(&k, 4).unwrap().len(), 3);
        assert_eq!(
            census.polynomials(&k, 17),
            Err(Error::CensusListMissing { degree: 17 })
        );
        assert_eq!(census.count(17).unwrap(), &count_moebius(2, 17).unwrap());
        assert_eq!(census.count(5), Err(Error::IncompleteCensus { degree: 5 }));
    }

    #[test]
    fn gauss_examples() {
        let census = IrreducibleCensus::enumerate_up_to(&fp(2), 4).unwrap();
        let report = verify_gauss(2, 4, &census).unwrap();
        assert!(report.holds);
        assert_eq!(report.lhs, Nat::from(16u32));
        let contributions: Vec<_> = report
            .terms
            .iter()
            .map(|t| (t.d, t.contribution.clone()))
            .collect();
        assert_eq!(
            contributions,
            vec![
                (1, Nat::from(2u32)),
                (2, Nat::from(2u32)),
                (4, Nat::from(12u32))
            ]
        );
        assert!(verify_gauss(2, 1, &census).unwrap().holds);
        let c3 = IrreducibleCensus::enumerate_up_to(&fp(3), 2).unwrap();
        let r3 = verify_gauss(3, 2, &c3).unwrap();
        assert!(r3.holds);
        assert_eq!(r3.rhs, Nat::from(9u32));
        assert_eq!(
            verify_gauss(2, 6, &census),
            Err(Error::IncompleteCensus { degree: 6 })
        );
    }

    #[test]
    fn gauss_detects_wrong_counts() {
        let mut census = IrreducibleCensus::from_moebius(2, 4).unwrap();
        census.by_degree.get_mut(&2).unwrap().count = Nat::from(2u32);
        assert!(!verify_gauss(2, 4, &census).unwrap().holds);
    }

    #[test]
    fn enumeration_independent_of_thread_count() {
        let k = fp(3);
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| IrreducibleCensus::enumerate_up_to(&k, 6).unwrap())
        };
        assert_eq!(run(1), run(4));
    }
}
