//! The coefficient-field contract shared by prime fields and quotient-ring
//! extensions, plus a type-erased [`AnyField`] for towers built at runtime.

use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;

use crate::extension::{ExtElement, ExtensionField};
use crate::prime_field::{FpElement, PrimeField};
use crate::Result;

/// A finite field usable as the coefficient ring of [`crate::Poly`].
///
/// Elements are in bijection with `0..size()`: index 0 is zero, index 1 is
/// one, and the index order is the canonical enumeration order used to build
/// monic polynomials.
pub trait CoefficientField: Clone + PartialEq + Debug + Send + Sync {
    type Elem: Copy + Eq + Hash + Debug + Send + Sync;

    fn size(&self) -> u64;
    fn characteristic(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Result<Self::Elem>;
    fn element(&self, index: u64) -> Result<Self::Elem>;
    fn index_of(&self, a: Self::Elem) -> u64;
    fn descriptor(&self) -> FieldDescriptor;

    /// Text form of an element, used when printing polynomials.
    fn format_elem(&self, a: Self::Elem) -> String;

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    fn pow(&self, a: Self::Elem, mut exp: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    fn elements(&self) -> Vec<Self::Elem> {
        (0..self.size())
            .map(|i| self.element(i).expect("index below field size"))
            .collect()
    }
}

/// Serializable description of a realized field: the prime and the tower of
/// moduli (compact index form, innermost first).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldDescriptor {
    pub p: u64,
    pub size: u64,
    pub degree_over_prime: u32,
    pub tower: Vec<String>,
}

impl CoefficientField for PrimeField {
    type Elem = FpElement;

    fn size(&self) -> u64 {
        self.p()
    }
    fn characteristic(&self) -> u64 {
        self.p()
    }
    fn zero(&self) -> FpElement {
        self.elem(0)
    }
    fn one(&self) -> FpElement {
        self.elem(1)
    }
    fn add(&self, a: FpElement, b: FpElement) -> FpElement {
        a.add_unchecked(b)
    }
    fn sub(&self, a: FpElement, b: FpElement) -> FpElement {
        a.sub_unchecked(b)
    }
    fn mul(&self, a: FpElement, b: FpElement) -> FpElement {
        a.mul_unchecked(b)
    }
    fn neg(&self, a: FpElement) -> FpElement {
        -a
    }
    fn inv(&self, a: FpElement) -> Result<FpElement> {
        a.inv()
    }
    fn element(&self, index: u64) -> Result<FpElement> {
        self.from_residue(index)
    }
    fn index_of(&self, a: FpElement) -> u64 {
        a.residue()
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p(),
            size: self.p(),
            degree_over_prime: 1,
            tower: Vec::new(),
        }
    }
    fn format_elem(&self, a: FpElement) -> String {
        a.residue().to_string()
    }
    fn pow(&self, a: FpElement, exp: u64) -> FpElement {
        a.pow(exp)
    }
}

/// A prime field or an extension tower chosen at runtime. Elements are
/// represented by their canonical index.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyField {
    Prime(PrimeField),
    Extension(ExtensionField),
}

impl AnyField {
    /// Degree over the field this one was built on (1 for a prime field).
    pub fn degree_over_base(&self) -> u32 {
        match self {
            AnyField::Prime(_) => 1,
            AnyField::Extension(ext) => ext.degree(),
        }
    }

    /// Size of the field this one was built on (itself for a prime field).
    pub fn base_size(&self) -> u64 {
        match self {
            AnyField::Prime(f) => f.p(),
            AnyField::Extension(ext) => ext.base().size(),
        }
    }
}

impl From<PrimeField> for AnyField {
    fn from(f: PrimeField) -> Self {
        AnyField::Prime(f)
    }
}

impl From<ExtensionField> for AnyField {
    fn from(f: ExtensionField) -> Self {
        AnyField::Extension(f)
    }
}

impl CoefficientField for AnyField {
    type Elem = u64;

    fn size(&self) -> u64 {
        match self {
            AnyField::Prime(f) => f.size(),
            AnyField::Extension(f) => f.size(),
        }
    }
    fn characteristic(&self) -> u64 {
        match self {
            AnyField::Prime(f) => f.p(),
            AnyField::Extension(f) => f.characteristic(),
        }
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        match self {
            AnyField::Prime(f) => {
                let s = a + b;
                if s >= f.p() {
                    s - f.p()
                } else {
                    s
                }
            }
            AnyField::Extension(f) => f.add(ExtElement(a), ExtElement(b)).0,
        }
    }
    fn sub(&self, a: u64, b: u64) -> u64 {
        match self {
            AnyField::Prime(f) => {
                if a >= b {
                    a - b
                } else {
                    a + f.p() - b
                }
            }
            AnyField::Extension(f) => f.sub(ExtElement(a), ExtElement(b)).0,
        }
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        match self {
            AnyField::Prime(f) => a * b % f.p(),
            AnyField::Extension(f) => f.mul(ExtElement(a), ExtElement(b)).0,
        }
    }
    fn neg(&self, a: u64) -> u64 {
        match self {
            AnyField::Prime(f) => (f.p() - a) % f.p(),
            AnyField::Extension(f) => f.neg(ExtElement(a)).0,
        }
    }
    fn inv(&self, a: u64) -> Result<u64> {
        match self {
            AnyField::Prime(f) => Ok(f.from_residue(a)?.inv()?.residue()),
            AnyField::Extension(f) => Ok(f.inv(ExtElement(a))?.0),
        }
    }
    fn element(&self, index: u64) -> Result<u64> {
        match self {
            AnyField::Prime(f) => f.from_residue(index).map(FpElement::residue),
            AnyField::Extension(f) => f.element(index).map(|e| e.0),
        }
    }
    fn index_of(&self, a: u64) -> u64 {
        a
    }
    fn descriptor(&self) -> FieldDescriptor {
        match self {
            AnyField::Prime(f) => f.descriptor(),
            AnyField::Extension(f) => f.descriptor(),
        }
    }
    fn format_elem(&self, a: u64) -> String {
        match self {
            AnyField::Prime(_) => a.to_string(),
            AnyField::Extension(f) => f.format_elem(ExtElement(a)),
        }
    }
}
