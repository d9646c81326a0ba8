//! Exact integer number theory: primality, factorization, divisors, the
//! Möbius function and factorial/binomial valuations.
//!
//! Small parameters (degrees, field sizes, primes) travel as `u64` with checked
//! arithmetic; anything that grows with them (`q^n`, `C(2N, N)`, `4^N`) is a
//! [`Nat`].

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::{Error, Result};

/// Arbitrary-precision non-negative integer.
pub type Nat = BigUint;

/// Trial division stops here; a cofactor that is still composite beyond this
/// bound is rejected instead of searched for.
const TRIAL_DIVISION_LIMIT: u64 = 1 << 24;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality for every `u64`.
///
/// Small inputs go through trial division; larger ones through Miller-Rabin
/// with the first twelve prime bases, which has no pseudoprimes below 2^64.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization with strictly increasing primes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Exponent of `p`, zero when `p` does not occur.
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Multiplies the factors back together.
    pub fn reconstruct(&self) -> Nat {
        self.factors
            .iter()
            .fold(Nat::one(), |acc, &(p, e)| acc * Nat::from(p).pow(e))
    }
}

/// Factors a `u64` by trial division.
pub fn factorize_u64(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroArgument { op: "factorize" });
    }
    let mut rem = n;
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= rem {
        if rem.is_multiple_of(d) {
            let mut e = 0;
            while rem.is_multiple_of(d) {
                rem /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rem > 1 {
        factors.push((rem, 1));
    }
    Ok(Factorization { factors })
}

/// Factors an arbitrary-precision integer whose prime factors are all small,
/// or which has at most one prime factor above the trial-division limit.
pub fn factorize(n: &Nat) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::ZeroArgument { op: "factorize" });
    }
    if let Some(small) = n.to_u64() {
        return factorize_u64(small);
    }
    let mut rem = n.clone();
    let mut factors = Vec::new();
    let mut d = 2u64;
    loop {
        if let Some(small) = rem.to_u64() {
            let mut tail = factorize_u64(small)?;
            factors.append(&mut tail.factors);
            break;
        }
        if d > TRIAL_DIVISION_LIMIT {
            return Err(Error::InvalidInput(format!(
                "{n} has a cofactor above the trial-division range"
            )));
        }
        let divisor = Nat::from(d);
        let mut e = 0;
        loop {
            let (quot, r) = rem.div_rem(&divisor);
            if !r.is_zero() {
                break;
            }
            rem = quot;
            e += 1;
        }
        if e > 0 {
            factors.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    Ok(Factorization { factors })
}

/// μ(n).
pub fn moebius(n: u64) -> Result<i8> {
    if n == 0 {
        return Err(Error::ZeroArgument { op: "moebius" });
    }
    let f = factorize_u64(n)?;
    if f.factors.iter().any(|&(_, e)| e > 1) {
        Ok(0)
    } else if f.factors.len() % 2 == 0 {
        Ok(1)
    } else {
        Ok(-1)
    }
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::ZeroArgument { op: "divisors" });
    }
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            low.push(d);
            if d != n / d {
                high.push(n / d);
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    Ok(low)
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(n: u64) -> Result<Vec<u64>> {
    Ok(factorize_u64(n)?.primes().collect())
}

/// Splits `q = p^k` with `p` prime, or `None` if `q` is not a prime power.
pub fn prime_power_parts(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = factorize_u64(q).ok()?;
    match f.factors.as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

/// `base^exp` as a [`Nat`].
pub fn pow_nat(base: u64, exp: u64) -> Nat {
    let mut acc = Nat::one();
    let b = Nat::from(base);
    for _ in 0..exp {
        acc *= &b;
    }
    acc
}

/// `base^exp` in `u64`, failing loudly on overflow.
pub fn checked_pow(base: u64, exp: u64, op: &'static str) -> Result<u64> {
    let exp = u32::try_from(exp).map_err(|_| Error::Overflow(op))?;
    base.checked_pow(exp).ok_or(Error::Overflow(op))
}

/// Exponent of the prime `p` in `n!`, as a sum of `⌊n/p^k⌋`.
pub fn legendre_valuation(n: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut total = 0;
    let mut pk = p;
    while pk <= n {
        total += n / pk;
        match pk.checked_mul(p) {
            Some(next) => pk = next,
            None => break,
        }
    }
    Ok(total)
}

pub fn factorial(n: u64) -> Nat {
    (2..=n).fold(Nat::one(), |acc, k| acc * k)
}

/// `C(2N, N)`, exact.
pub fn central_binomial(n: u64) -> Result<Nat> {
    if n == 0 {
        return Err(Error::ZeroArgument {
            op: "central_binomial",
        });
    }
    // After step k the accumulator is C(N + k, k), so each division is exact.
    let mut acc = Nat::one();
    for k in 1..=n {
        acc *= n + k;
        acc /= k;
    }
    Ok(acc)
}

/// Sieve of Eratosthenes: `flags[i]` is true iff `i` is prime, for `i <= limit`.
pub fn prime_sieve(limit: u64) -> Vec<bool> {
    let len = limit as usize + 1;
    let mut flags = vec![true; len];
    flags[0] = false;
    if len > 1 {
        flags[1] = false;
    }
    let mut i = 2usize;
    while i * i < len {
        if flags[i] {
            let mut j = i * i;
            while j < len {
                flags[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    flags
}

/// Primes up to and including `limit`.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    prime_sieve(limit)
        .iter()
        .enumerate()
        .filter_map(|(i, &is_p)| is_p.then_some(i as u64))
        .collect()
}

/// Serializes a [`Nat`] as a decimal string, since counts routinely exceed
/// what JSON consumers can hold in a double.
pub mod nat_decimal {
    use super::Nat;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(value: &Nat, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(value)
    }

    pub mod option {
        use super::Nat;
        use serde::Serializer;

        pub fn serialize<S: Serializer>(value: &Option<Nat>, s: S) -> Result<S::Ok, S::Error> {
            match value {
                Some(v) => s.collect_str(v),
                None => s.serialize_none(),
            }
        }
    }

    pub mod vec {
        use super::Nat;
        use serde::ser::{SerializeSeq, Serializer};

        pub fn serialize<S: Serializer>(values: &[Nat], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(values.len()))?;
            for v in values {
                seq.serialize_element(&v.to_string())?;
            }
            seq.end()
        }
    }
}
