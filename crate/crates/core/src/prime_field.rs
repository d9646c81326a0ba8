//! The prime field `F_p = Z/pZ` with canonical residues in `[0, p)`.

use std::fmt;

use serde::Serialize;

use crate::arith::is_prime;
use crate::{Error, Result};

/// Largest supported characteristic.
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeField {
    p: u64,
}

/// A residue class mod `p`. The modulus travels with the value so that
/// elements of different prime fields are never combined silently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpElement {
    residue: u64,
    modulus: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_PRIME {
            return Err(Error::InvalidInput(format!(
                "characteristic {p} exceeds the supported bound {MAX_PRIME}"
            )));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// The canonical residue of an arbitrary integer.
    pub fn elem(&self, value: i64) -> FpElement {
        FpElement {
            residue: value.rem_euclid(self.p as i64) as u64,
            modulus: self.p,
        }
    }

    /// Decodes a residue already in `[0, p)`.
    pub fn from_residue(&self, residue: u64) -> Result<FpElement> {
        if residue >= self.p {
            return Err(Error::IndexOutOfRange {
                index: residue,
                size: self.p,
            });
        }
        Ok(FpElement {
            residue,
            modulus: self.p,
        })
    }

    /// All elements in canonical order `0, 1, ..., p-1`.
    pub fn enumerate(&self) -> Vec<FpElement> {
        (0..self.p)
            .map(|residue| FpElement {
                residue,
                modulus: self.p,
            })
            .collect()
    }
}

impl FpElement {
    pub fn residue(self) -> u64 {
        self.residue
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    fn same_field(self, other: Self) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn try_add(self, other: Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(self, other: Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn try_mul(self, other: Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(self) -> Result<Self> {
        if self.residue == 0 {
            return Err(Error::InversionOfZero);
        }
        let (mut r0, mut r1) = (self.modulus as i64, self.residue as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let quot = r0 / r1;
            (r0, r1) = (r1, r0 - quot * r1);
            (t0, t1) = (t1, t0 - quot * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(Self {
            residue: t0.rem_euclid(self.modulus as i64) as u64,
            ..self
        })
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let mut acc = Self {
            residue: 1 % self.modulus,
            ..self
        };
        let mut base = self;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_unchecked(base);
            }
            base = base.mul_unchecked(base);
            exp >>= 1;
        }
        acc
    }

    pub(crate) fn add_unchecked(self, other: Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let sum = self.residue + other.residue;
        Self {
            residue: if sum >= self.modulus {
                sum - self.modulus
            } else {
                sum
            },
            ..self
        }
    }

    pub(crate) fn sub_unchecked(self, other: Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        Self {
            residue: if self.residue >= other.residue {
                self.residue - other.residue
            } else {
                self.residue + self.modulus - other.residue
            },
            ..self
        }
    }

    pub(crate) fn mul_unchecked(self, other: Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        Self {
            residue: self.residue * other.residue % self.modulus,
            ..self
        }
    }
}

impl fmt::Display for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl std::ops::Neg for FpElement {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            residue: (self.modulus - self.residue) % self.modulus,
            ..self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL_PRIMES: [u64; 5] = [2, 3, 5, 7, 11];

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(PrimeField::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn operation_examples() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.elem(3).try_add(f5.elem(4)).unwrap().residue(), 2);
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(f2.elem(1).try_add(f2.elem(1)).unwrap().residue(), 0);
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.elem(3).try_mul(f7.elem(5)).unwrap().residue(), 1);
        assert_eq!(f7.elem(2).try_sub(f7.elem(5)).unwrap().residue(), 4);
        assert_eq!((-f7.elem(2)).residue(), 5);
        assert_eq!((-f7.elem(0)).residue(), 0);
        assert_eq!(f7.elem(-1).residue(), 6);
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = PrimeField::new(5).unwrap().elem(1);
        let b = PrimeField::new(7).unwrap().elem(1);
        assert_eq!(a.try_add(b), Err(Error::MixedFields));
        assert_eq!(a.try_sub(b), Err(Error::MixedFields));
        assert_eq!(a.try_mul(b), Err(Error::MixedFields));
    }

    #[test]
    fn inverse_examples() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.elem(1).inv().unwrap().residue(), 1);
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.elem(3).inv().unwrap().residue(), 5);
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(f2.elem(1).inv().unwrap().residue(), 1);
        assert_eq!(f7.elem(0).inv(), Err(Error::InversionOfZero));
    }

    #[test]
    fn enumeration_is_canonical() {
        for p in [2u64, 3, 5] {
            let residues: Vec<u64> = PrimeField::new(p)
                .unwrap()
                .enumerate()
                .into_iter()
                .map(FpElement::residue)
                .collect();
            assert_eq!(residues, (0..p).collect::<Vec<_>>());
        }
        assert!(PrimeField::new(5).unwrap().from_residue(5).is_err());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for p in SMALL_PRIMES {
            let field = PrimeField::new(p).unwrap();
            let elems = field.enumerate();
            let zero = field.elem(0);
            let one = field.elem(1);
            for &a in &elems {
                assert_eq!(a.add_unchecked(zero), a);
                assert_eq!(a.mul_unchecked(one), a);
                assert_eq!(a.add_unchecked(-a), zero);
                if !a.is_zero() {
                    assert_eq!(a.mul_unchecked(a.inv().unwrap()), one);
                    assert_eq!(a.inv().unwrap().inv().unwrap(), a);
                }
                assert_eq!(a.pow(p), a, "Fermat");
                for &b in &elems {
                    assert_eq!(a.add_unchecked(b), b.add_unchecked(a));
                    assert_eq!(a.mul_unchecked(b), b.mul_unchecked(a));
                    assert_eq!(a.sub_unchecked(b).add_unchecked(b), a);
                    for &c in &elems {
                        assert_eq!(
                            a.add_unchecked(b).add_unchecked(c),
                            a.add_unchecked(b.add_unchecked(c))
                        );
                        assert_eq!(
                            a.mul_unchecked(b).mul_unchecked(c),
                            a.mul_unchecked(b.mul_unchecked(c))
                        );
                        assert_eq!(
                            a.mul_unchecked(b.add_unchecked(c)),
                            a.mul_unchecked(b).add_unchecked(a.mul_unchecked(c))
                        );
                    }
                }
            }
        }
    }
}
