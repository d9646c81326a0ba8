//! Central binomial valuations via Legendre's formula, the size bounds
//! `4^N/(2N+1) <= C(2N,N) <= 4^N`, and a sieve-backed scan of Bertrand's
//! postulate on the half-open interval `(N, 2N]`.

use serde::Serialize;

use crate::arith::{self, central_binomial, is_prime, nat_decimal, pow_nat, Nat};
use crate::{Error, Result};

/// Exponent of `p` in `C(2N, N)`: `Σ_k (⌊2N/p^k⌋ - 2⌊N/p^k⌋)`.
pub fn vp_central_binomial(n: u64, p: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument {
            op: "vp_central_binomial",
        });
    }
    let two_n = n
        .checked_mul(2)
        .ok_or(Error::Overflow("vp_central_binomial"))?;
    Ok(arith::legendre_valuation(two_n, p)? - 2 * arith::legendre_valuation(n, p)?)
}

/// Whether `p^(v_p(C(2N,N))) <= 2N`.
pub fn check_prime_power_bound(n: u64, p: u64) -> Result<bool> {
    let v = vp_central_binomial(n, p)?;
    Ok(pow_nat(p, v) <= Nat::from(2 * n))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeValuation {
    pub p: u64,
    pub v_p: u64,
}

/// The prime factorization of `C(2N, N)` over all primes `p <= 2N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinomialValuationProfile {
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(with = "nat_decimal")]
    pub value: Nat,
    pub per_prime: Vec<PrimeValuation>,
    /// `∏ p^(v_p)` reproduces `value`.
    pub reconstructs: bool,
}

pub fn valuation_profile(n: u64) -> Result<BinomialValuationProfile> {
    let value = central_binomial(n)?;
    let per_prime = arith::primes_up_to(2 * n)
        .into_iter()
        .map(|p| {
            Ok(PrimeValuation {
                p,
                v_p: vp_central_binomial(n, p)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let product: Nat = per_prime.iter().map(|pv| pow_nat(pv.p, pv.v_p)).product();
    Ok(BinomialValuationProfile {
        n,
        reconstructs: product == value,
        value,
        per_prime,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    #[serde(rename = "N")]
    pub n: u64,
    /// `4^N <= (2N+1) C(2N,N)`.
    pub lower_holds: bool,
    /// `C(2N,N) <= 4^N`.
    pub upper_holds: bool,
    pub passed: bool,
}

/// Both size bounds, cross-multiplied so no division occurs.
pub fn central_binomial_bounds(n: u64) -> Result<BoundsReport> {
    let c = central_binomial(n)?;
    let four_n = pow_nat(4, n);
    let lower_holds = four_n <= &c * (2 * n + 1);
    let upper_holds = c <= four_n;
    Ok(BoundsReport {
        n,
        lower_holds,
        upper_holds,
        passed: lower_holds && upper_holds,
    })
}

/// A prime `witness` with `N < witness <= 2N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PostulateCertificate {
    #[serde(rename = "N")]
    pub n: u64,
    pub witness: u64,
}

impl PostulateCertificate {
    pub fn is_valid(&self) -> bool {
        self.n < self.witness && self.witness <= 2 * self.n && is_prime(self.witness)
    }
}

/// Smallest prime in `(N, 2N]`.
pub fn find_bertrand_witness(n: u64) -> Result<PostulateCertificate> {
    if n == 0 {
        return Err(Error::ZeroArgument {
            op: "find_bertrand_witness",
        });
    }
    let top = n
        .checked_mul(2)
        .ok_or(Error::Overflow("find_bertrand_witness"))?;
    (n + 1..=top)
        .find(|&m| is_prime(m))
        .map(|witness| PostulateCertificate { n, witness })
        .ok_or_else(|| Error::InvariantViolation(format!("no prime in ({n}, {top}]")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub max_n: u64,
    pub certificates: u64,
    pub failures: u64,
    /// Largest `witness - N` over the scan, and the first `N` attaining it.
    pub largest_gap: u64,
    pub largest_gap_at: u64,
}

/// Certificates for every `N` in `[2, max_n]`, from one sieve up to `2 max_n`.
pub fn scan_postulate(max_n: u64) -> Result<(ScanSummary, Vec<PostulateCertificate>)> {
    if max_n < 2 {
        return Err(Error::InvalidInput("scan needs max_n >= 2".into()));
    }
    let top = max_n
        .checked_mul(2)
        .ok_or(Error::Overflow("scan_postulate"))?;
    let sieve = arith::prime_sieve(top);
    // next_prime[m] = smallest prime >= m, for m <= top.
    let mut next_prime = vec![u64::MAX; sieve.len() + 1];
    for m in (0..sieve.len()).rev() {
        next_prime[m] = if sieve[m] {
            m as u64
        } else {
            next_prime[m + 1]
        };
    }
    let mut certs = Vec::with_capacity(max_n as usize - 1);
    let (mut largest_gap, mut largest_gap_at) = (0, 0);
    for n in 2..=max_n {
        let witness = next_prime[n as usize + 1];
        let cert = PostulateCertificate { n, witness };
        if witness > 2 * n {
            return Err(Error::InvariantViolation(format!(
                "no prime in ({n}, {}]",
                2 * n
            )));
        }
        if witness - n > largest_gap {
            largest_gap = witness - n;
            largest_gap_at = n;
        }
        certs.push(cert);
    }
    let failures = certs.iter().filter(|c| !c.is_valid()).count() as u64;
    let summary = ScanSummary {
        max_n,
        certificates: certs.len() as u64,
        failures,
        largest_gap,
        largest_gap_at,
    };
    Ok((summary, certs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factorize;

    #[test]
    fn valuation_examples() {
        assert_eq!(vp_central_binomial(5, 2), Ok(2));
        assert_eq!(vp_central_binomial(5, 7), Ok(1));
        assert_eq!(vp_central_binomial(5, 11), Ok(0));
        assert_eq!(vp_central_binomial(5, 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn valuations_match_factorization() {
        for n in 1..=30 {
            let c = central_binomial(n).unwrap();
            let f = factorize(&c).unwrap();
            for p in arith::primes_up_to(2 * n) {
                assert_eq!(vp_central_binomial(n, p).unwrap(), f.exponent_of(p) as u64);
            }
            assert!(f.primes().all(|p| p <= 2 * n));
            let profile = valuation_profile(n).unwrap();
            assert!(profile.reconstructs);
        }
    }

    #[test]
    fn prime_power_bound_examples() {
        assert_eq!(check_prime_power_bound(5, 2), Ok(true));
        assert_eq!(check_prime_power_bound(5, 7), Ok(true));
        assert_eq!(check_prime_power_bound(1, 2), Ok(true));
    }

    #[test]
    fn large_primes_appear_once() {
        for n in 1..=200 {
            for p in arith::primes_up_to(2 * n).into_iter().filter(|&p| p > n) {
                assert_eq!(vp_central_binomial(n, p), Ok(1));
            }
        }
    }

    #[test]
    fn bounds_examples() {
        for n in [1, 5, 30] {
            assert!(central_binomial_bounds(n).unwrap().passed);
        }
    }

    #[test]
    fn witness_examples() {
        assert_eq!(find_bertrand_witness(2).unwrap().witness, 3);
        assert_eq!(find_bertrand_witness(6).unwrap().witness, 7);
        assert_eq!(find_bertrand_witness(24).unwrap().witness, 29);
        assert_eq!(find_bertrand_witness(1).unwrap().witness, 2);
    }

    #[test]
    fn scan_examples() {
        let (s, certs) = scan_postulate(10).unwrap();
        assert_eq!((s.certificates, s.failures), (9, 0));
        assert!(certs.iter().all(PostulateCertificate::is_valid));
        let (s, certs) = scan_postulate(2).unwrap();
        assert_eq!(s.certificates, 1);
        assert_eq!(certs[0], PostulateCertificate { n: 2, witness: 3 });
        assert!(scan_postulate(1).is_err());
    }

    #[test]
    fn scan_matches_direct_search() {
        let (_, certs) = scan_postulate(3000).unwrap();
        for c in certs {
            assert_eq!(c, find_bertrand_witness(c.n).unwrap());
        }
    }
}
