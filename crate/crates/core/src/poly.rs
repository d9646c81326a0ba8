//! Dense univariate polynomials over a [`CoefficientField`]: ring operations,
//! the division algorithm, gcd, modular exponentiation and the canonical
//! enumeration of monic polynomials.

use std::fmt;

use num_traits::Zero;

use crate::arith::{checked_pow, Nat};
use crate::field::CoefficientField;
use crate::{Error, Result};

/// Degree of a polynomial; the zero polynomial sits below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// `coeffs[i]` is the coefficient of `x^i`; the last stored coefficient is
/// nonzero, and the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<K: CoefficientField> {
    field: K,
    coeffs: Vec<K::Elem>,
}

impl<K: CoefficientField> Poly<K> {
    pub fn from_coeffs(field: &K, mut coeffs: Vec<K::Elem>) -> Self {
        while coeffs.last().is_some_and(|&c| field.is_zero(c)) {
            coeffs.pop();
        }
        Self {
            field: field.clone(),
            coeffs,
        }
    }

    /// Builds from element indices, lowest degree first.
    pub fn from_indices(field: &K, indices: &[u64]) -> Result<Self> {
        let coeffs = indices
            .iter()
            .map(|&i| field.element(i))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(field, coeffs))
    }

    pub fn zero(field: &K) -> Self {
        Self::from_coeffs(field, Vec::new())
    }

    pub fn one(field: &K) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: &K, c: K::Elem) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(field: &K, c: K::Elem, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(field, coeffs)
    }

    pub fn x(field: &K) -> Self {
        Self::monomial(field, field.one(), 1)
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn coeffs(&self) -> &[K::Elem] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> K::Elem {
        self.coeffs
            .get(i)
            .copied()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn coeff_indices(&self) -> Vec<u64> {
        self.coeffs
            .iter()
            .map(|&c| self.field.index_of(c))
            .collect()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.field.one()
    }

    pub fn leading(&self) -> Option<K::Elem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(self.field.one())
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.zip_with(other, |k, a, b| k.add(a, b)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.zip_with(other, |k, a, b| k.sub(a, b)))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&K, K::Elem, K::Elem) -> K::Elem) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| op(&self.field, self.coeff(i), other.coeff(i)))
            .collect();
        Self::from_coeffs(&self.field, coeffs)
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|&c| self.field.neg(c)).collect();
        Self::from_coeffs(&self.field, coeffs)
    }

    pub fn scale(&self, c: K::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        Self::from_coeffs(&self.field, coeffs)
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let k = &self.field;
        let mut out = vec![k.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = k.add(out[i + j], k.mul(a, b));
            }
        }
        Ok(Self::from_coeffs(k, out))
    }

    /// Scales to leading coefficient one.
    pub fn monic(&self) -> Result<Self> {
        match self.leading() {
            None => Err(Error::DivisionByZero),
            Some(lc) => Ok(self.scale(self.field.inv(lc)?)),
        }
    }

    /// Quotient and remainder with `self = q * divisor + r`, `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_field(divisor)?;
        let k = &self.field;
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(k), self.clone()));
        }
        let lead_inv = k.inv(lead)?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![k.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = rem[i + dd];
            if k.is_zero(top) {
                continue;
            }
            let factor = k.mul(top, lead_inv);
            quot[i] = factor;
            for (j, &g) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = k.sub(rem[i + j], k.mul(factor, g));
            }
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(k, quot), Self::from_coeffs(k, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Exact quotient; a nonzero remainder is reported as an invariant violation.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divmod(divisor)?;
        if !r.is_zero() {
            return Err(Error::InvariantViolation(format!(
                "{divisor} does not divide {self}"
            )));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `g` monic and `s * self + t * other = g`.
    pub fn xgcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let k = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(k), Self::zero(k));
        let (mut t0, mut t1) = (Self::zero(k), Self::one(k));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = s0.sub(&q.mul(&s1)?)?;
            let t = t0.sub(&q.mul(&t1)?)?;
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        let lc_inv = k.inv(r0.leading().expect("nonzero gcd"))?;
        Ok((r0.scale(lc_inv), s0.scale(lc_inv), t0.scale(lc_inv)))
    }

    /// `self^exp mod modulus` by square-and-multiply.
    pub fn powmod(&self, exp: &Nat, modulus: &Self) -> Result<Self> {
        self.check_field(modulus)?;
        if !matches!(modulus.degree(), Degree::Finite(d) if d >= 1) {
            return Err(Error::ConstantModulus { op: "powmod" });
        }
        let base = self.rem(modulus)?;
        let mut acc = Self::one(&self.field);
        for bit in (0..exp.bits()).rev() {
            acc = acc.mul(&acc)?.rem(modulus)?;
            if exp.bit(bit) {
                acc = acc.mul(&base)?.rem(modulus)?;
            }
        }
        if exp.is_zero() {
            acc = acc.rem(modulus)?;
        }
        Ok(acc)
    }

    /// Evaluates at a field element by Horner's rule.
    pub fn eval(&self, at: K::Elem) -> K::Elem {
        let k = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(k.zero(), |acc, &c| k.add(k.mul(acc, at), c))
    }

    /// Position of a monic polynomial in [`enumerate_monic`] order for its degree.
    pub fn monic_index(&self) -> Result<u64> {
        if !self.is_monic() {
            return Err(Error::NotMonic { op: "monic_index" });
        }
        let q = self.field.size();
        let d = self.coeffs.len() - 1;
        self.coeffs[..d].iter().rev().try_fold(0u64, |acc, &c| {
            acc.checked_mul(q)
                .and_then(|v| v.checked_add(self.field.index_of(c)))
                .ok_or(Error::Overflow("monic_index"))
        })
    }

    /// Compact index form of a monic polynomial: `degree:digits`, where the
    /// digits are the base-`q` indices of `a_{d-1} ... a_0` (most significant
    /// first), so the digit string read in base `q` is the enumeration index.
    /// Digits are concatenated for `q <= 10` and dot-separated otherwise.
    pub fn compact(&self) -> Result<String> {
        if !self.is_monic() {
            return Err(Error::NotMonic { op: "compact" });
        }
        let d = self.coeffs.len() - 1;
        let digits: Vec<String> = self.coeffs[..d]
            .iter()
            .rev()
            .map(|&c| self.field.index_of(c).to_string())
            .collect();
        let sep = if self.field.size() <= 10 { "" } else { "." };
        Ok(format!("{d}:{}", digits.join(sep)))
    }

    /// Parses the compact index form produced by [`Poly::compact`].
    pub fn parse_compact(field: &K, text: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("malformed compact polynomial {text:?}"));
        let (deg, digits) = text.trim().split_once(':').ok_or_else(bad)?;
        let d: usize = deg.parse().map_err(|_| bad())?;
        let parsed: Vec<u64> = if digits.is_empty() {
            Vec::new()
        } else if field.size() <= 10 {
            digits
                .chars()
                .map(|c| c.to_digit(10).map(u64::from).ok_or_else(bad))
                .collect::<Result<_>>()?
        } else {
            digits
                .split('.')
                .map(|s| s.parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        };
        if parsed.len() != d {
            return Err(bad());
        }
        let mut indices: Vec<u64> = parsed.into_iter().rev().collect();
        indices.push(1);
        Self::from_indices(field, &indices)
    }
}

impl<K: CoefficientField> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let k = &self.field;
        let plain = matches!(k.descriptor().degree_over_prime, 1);
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if k.is_zero(c) {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let coeff = k.format_elem(c);
            let is_one = c == k.one();
            match i {
                0 => f.write_str(&coeff)?,
                _ => {
                    if !is_one {
                        if plain {
                            f.write_str(&coeff)?;
                        } else {
                            write!(f, "({coeff})")?;
                        }
                    }
                    if i == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<K: CoefficientField> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Number of monic polynomials of degree `d`, `q^d`, if it fits in `u64`.
pub fn monic_count<K: CoefficientField>(field: &K, d: usize) -> Result<u64> {
    checked_pow(field.size(), d as u64, "monic_count")
}

/// The monic polynomial of degree `d` at position `index`: its lower
/// coefficients are the base-`q` digits of `index`, least significant first.
pub fn monic_at<K: CoefficientField>(field: &K, d: usize, index: u64) -> Result<Poly<K>> {
    let q = field.size();
    let mut coeffs = Vec::with_capacity(d + 1);
    let mut rest = index;
    for _ in 0..d {
        coeffs.push(field.element(rest % q)?);
        rest /= q;
    }
    if rest != 0 {
        return Err(Error::IndexOutOfRange {
            index,
            size: monic_count(field, d).unwrap_or(u64::MAX),
        });
    }
    coeffs.push(field.one());
    Ok(Poly::from_coeffs(field, coeffs))
}

/// Iterator over the monic polynomials of one degree in canonical order.
pub struct MonicIter<K: CoefficientField> {
    field: K,
    degree: usize,
    next: u64,
    end: u64,
}

impl<K: CoefficientField> Iterator for MonicIter<K> {
    type Item = Poly<K>;

    fn next(&mut self) -> Option<Poly<K>> {
        if self.next >= self.end {
            return None;
        }
        let p = monic_at(&self.field, self.degree, self.next).ok();
        self.next += 1;
        p
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.end - self.next) as usize;
        (n, Some(n))
    }
}

pub fn monic_iter<K: CoefficientField>(field: &K, d: usize) -> Result<MonicIter<K>> {
    Ok(MonicIter {
        field: field.clone(),
        degree: d,
        next: 0,
        end: monic_count(field, d)?,
    })
}

/// All `q^d` monic polynomials of degree `d`, in canonical order.
pub fn enumerate_monic<K: CoefficientField>(field: &K, d: usize) -> Result<Vec<Poly<K>>> {
    Ok(monic_iter(field, d)?.collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::PrimeField;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn poly(k: &PrimeField, lo_first: &[u64]) -> Poly<PrimeField> {
        Poly::from_indices(k, lo_first).unwrap()
    }

    #[test]
    fn zero_degree_is_sentinel() {
        let k = f2();
        assert_eq!(Poly::zero(&k).degree(), Degree::MinusInfinity);
        assert!(Degree::MinusInfinity < Degree::Finite(0));
        assert_eq!(poly(&k, &[1, 0, 0]).degree(), Degree::Finite(0));
    }

    #[test]
    fn addition_examples() {
        let k = f2();
        let sum = poly(&k, &[0, 1, 1]).add(&poly(&k, &[1, 0, 1])).unwrap();
        assert_eq!(sum, poly(&k, &[1, 1]));
        let f = poly(&k, &[1, 0, 1, 1]);
        assert_eq!(f.add(&Poly::zero(&k)).unwrap(), f);
        let k3 = PrimeField::new(3).unwrap();
        assert!(poly(&k3, &[0, 2])
            .add(&poly(&k3, &[0, 1]))
            .unwrap()
            .is_zero());
        assert_eq!(f.sub(&f).unwrap(), Poly::zero(&k));
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = poly(&f2(), &[1, 1]);
        let b = poly(&PrimeField::new(3).unwrap(), &[1, 1]);
        assert_eq!(a.add(&b), Err(Error::MixedFields));
        assert_eq!(a.mul(&b), Err(Error::MixedFields));
        assert_eq!(a.divmod(&b).unwrap_err(), Error::MixedFields);
    }

    #[test]
    fn multiplication_examples() {
        let k = f2();
        assert_eq!(
            Poly::x(&k).mul(&poly(&k, &[1, 1])).unwrap(),
            poly(&k, &[0, 1, 1])
        );
        let f = poly(&k, &[1, 1, 0, 1]);
        assert_eq!(f.mul(&Poly::one(&k)).unwrap(), f);
        assert_eq!(
            poly(&k, &[1, 1, 1]).mul(&poly(&k, &[1, 1])).unwrap(),
            poly(&k, &[1, 0, 0, 1])
        );
    }

    #[test]
    fn division_examples() {
        let k = f2();
        let (q, r) = poly(&k, &[1, 0, 0, 1]).divmod(&poly(&k, &[1, 1])).unwrap();
        assert_eq!(q, poly(&k, &[1, 1, 1]));
        assert!(r.is_zero());
        let f = poly(&k, &[1, 1, 0, 1]);
        let (q, r) = f.divmod(&Poly::one(&k)).unwrap();
        assert_eq!((q, r.is_zero()), (f.clone(), true));
        let k3 = PrimeField::new(3).unwrap();
        let (q, r) = poly(&k3, &[0, 0, 1]).divmod(&Poly::x(&k3)).unwrap();
        assert_eq!(q, Poly::x(&k3));
        assert!(r.is_zero());
        assert_eq!(f.divmod(&Poly::zero(&k)), Err(Error::DivisionByZero));
    }

    #[test]
    fn division_contract_exhaustive_over_f2() {
        let k = f2();
        let dividends: Vec<_> = (0..=6)
            .flat_map(|d| enumerate_monic(&k, d).unwrap())
            .chain(std::iter::once(Poly::zero(&k)))
            .collect();
        for gd in 0..=3 {
            for g in enumerate_monic(&k, gd).unwrap() {
                for f in &dividends {
                    let (q, r) = f.divmod(&g).unwrap();
                    assert!(r.degree() < g.degree());
                    assert_eq!(&q.mul(&g).unwrap().add(&r).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn gcd_examples() {
        let k = f2();
        let f = poly(&k, &[1, 1, 0, 1]);
        assert_eq!(f.gcd(&Poly::zero(&k)).unwrap(), f);
        let k5 = PrimeField::new(5).unwrap();
        let g = poly(&k5, &[2, 0, 3]);
        assert_eq!(g.gcd(&Poly::zero(&k5)).unwrap(), g.monic().unwrap());
        assert_eq!(
            poly(&k, &[0, 1, 1]).gcd(&poly(&k, &[1, 0, 1])).unwrap(),
            poly(&k, &[1, 1])
        );
        assert!(poly(&k, &[1, 1, 1]).gcd(&Poly::x(&k)).unwrap().is_one());
        assert_eq!(Poly::zero(&k).gcd(&Poly::zero(&k)), Err(Error::GcdOfZeros));
    }

    #[test]
    fn gcd_against_common_divisor_scan() {
        let k = f2();
        let polys: Vec<_> = (0..=4)
            .flat_map(|d| enumerate_monic(&k, d).unwrap())
            .collect();
        let candidates: Vec<_> = (0..=4)
            .flat_map(|d| enumerate_monic(&k, d).unwrap())
            .collect();
        for f in &polys {
            for g in &polys {
                let h = f.gcd(g).unwrap();
                assert!(h.divides(f).unwrap() && h.divides(g).unwrap());
                let best = candidates
                    .iter()
                    .filter(|c| c.divides(f).unwrap() && c.divides(g).unwrap())
                    .max_by_key(|c| c.degree())
                    .unwrap();
                assert_eq!(best.degree(), h.degree());
                assert!(best.divides(&h).unwrap());
            }
        }
    }

    #[test]
    fn xgcd_bezout() {
        let k = PrimeField::new(5).unwrap();
        let f = poly(&k, &[1, 2, 0, 4, 1]);
        let g = poly(&k, &[3, 1, 1]);
        let (h, s, t) = f.xgcd(&g).unwrap();
        assert_eq!(h, f.gcd(&g).unwrap());
        assert_eq!(s.mul(&f).unwrap().add(&t.mul(&g).unwrap()).unwrap(), h);
    }

    #[test]
    fn powmod_examples() {
        let k = f2();
        let m = poly(&k, &[1, 1, 1]);
        let x = Poly::x(&k);
        assert_eq!(
            x.powmod(&Nat::from(1u32), &poly(&k, &[1, 0, 1, 1]))
                .unwrap(),
            x
        );
        assert_eq!(x.powmod(&Nat::from(4u32), &m).unwrap(), x);
        assert_eq!(x.powmod(&Nat::from(2u32), &m).unwrap(), poly(&k, &[1, 1]));
        assert!(x.powmod(&Nat::from(0u32), &m).unwrap().is_one());
        assert_eq!(
            x.powmod(&Nat::from(3u32), &Poly::one(&k)),
            Err(Error::ConstantModulus { op: "powmod" })
        );
        assert!(x.powmod(&Nat::from(3u32), &Poly::zero(&k)).is_err());
    }

    #[test]
    fn powmod_matches_repeated_multiplication() {
        let k = f2();
        let x = Poly::x(&k);
        for deg in 1..=4 {
            for m in enumerate_monic(&k, deg).unwrap() {
                for n in 1..=4u32 {
                    let e = 2u64.pow(n);
                    let mut naive = Poly::one(&k);
                    for _ in 0..e {
                        naive = naive.mul(&x).unwrap().rem(&m).unwrap();
                    }
                    assert_eq!(x.powmod(&Nat::from(e), &m).unwrap(), naive);
                }
            }
        }
    }

    #[test]
    fn monic_enumeration_examples() {
        let k = f2();
        assert_eq!(enumerate_monic(&k, 0).unwrap(), vec![Poly::one(&k)]);
        assert_eq!(
            enumerate_monic(&k, 1).unwrap(),
            vec![poly(&k, &[0, 1]), poly(&k, &[1, 1])]
        );
        let quadratics: Vec<String> = enumerate_monic(&k, 2)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(quadratics, ["x^2", "x^2 + 1", "x^2 + x", "x^2 + x + 1"]);
        let k3 = PrimeField::new(3).unwrap();
        assert_eq!(enumerate_monic(&k3, 3).unwrap().len(), 27);
    }

    #[test]
    fn monic_index_round_trips() {
        let k = PrimeField::new(3).unwrap();
        for d in 0..=4 {
            for (i, f) in enumerate_monic(&k, d).unwrap().iter().enumerate() {
                assert!(f.is_monic());
                assert_eq!(f.degree(), Degree::Finite(d));
                assert_eq!(f.monic_index().unwrap(), i as u64);
                assert_eq!(Poly::parse_compact(&k, &f.compact().unwrap()).unwrap(), *f);
            }
        }
        assert!(monic_at(&k, 2, 9).is_err());
    }

    #[test]
    fn display_and_compact_forms() {
        let k = f2();
        let f = poly(&k, &[1, 1, 0, 0, 1]);
        assert_eq!(f.to_string(), "x^4 + x + 1");
        assert_eq!(f.compact().unwrap(), "4:0011");
        assert_eq!(f.monic_index().unwrap(), 3);
        assert_eq!(Poly::x(&k).compact().unwrap(), "1:0");
        assert_eq!(Poly::one(&k).compact().unwrap(), "0:");
        let k3 = PrimeField::new(3).unwrap();
        assert_eq!(poly(&k3, &[0, 2, 0, 1]).to_string(), "x^3 + 2x");
        assert_eq!(Poly::zero(&k3).to_string(), "0");
        assert!(Poly::parse_compact(&k, "3:01").is_err());
        assert!(Poly::parse_compact(&k, "2:21").is_err());
        assert!(poly(&k3, &[0, 2]).compact().is_err());
    }

    #[test]
    fn evaluation() {
        let k = PrimeField::new(3).unwrap();
        let f = poly(&k, &[0, 2, 0, 1]); // x^3 - x
        for a in k.enumerate() {
            assert!(f.eval(a).is_zero());
        }
    }
}
