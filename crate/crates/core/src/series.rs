//! Truncated formal power series in `t` with exact integer coefficients.
//!
//! The zeta function of `F_q[x]` becomes `Σ q^n t^n` under `t = q^(-s)`; its
//! Euler product over irreducibles and its logarithmic derivative are finite
//! integer computations at every truncation order.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{pow_nat, Nat};
use crate::irreducibles::IrreducibleCensus;
use crate::{Error, Result};

/// `c_0 + c_1 t + ... + c_T t^T`, with all higher powers discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Pads or truncates `coeffs` to exactly `trunc + 1` terms.
    pub fn new(trunc: usize, mut coeffs: Vec<BigInt>) -> Self {
        coeffs.resize(trunc + 1, BigInt::zero());
        Self { coeffs }
    }

    pub fn from_i64(trunc: usize, coeffs: &[i64]) -> Self {
        Self::new(trunc, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one(trunc: usize) -> Self {
        Self::new(trunc, vec![BigInt::one()])
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn check_trunc(&self, other: &Self) -> Result<()> {
        if self.trunc() == other.trunc() {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "series truncated at {} and {}",
                self.trunc(),
                other.trunc()
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_trunc(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { coeffs })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_trunc(other)?;
        let t = self.trunc();
        let mut out = vec![BigInt::zero(); t + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=t - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplicative inverse; needs constant term ±1 to stay integral.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || *c0 == -BigInt::one()) {
            return Err(Error::NonUnitConstantTerm);
        }
        let t = self.trunc();
        let mut inv = vec![BigInt::zero(); t + 1];
        inv[0] = c0.clone();
        for n in 1..=t {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &inv[n - k];
            }
            inv[n] = -(acc * c0);
        }
        Ok(Self { coeffs: inv })
    }

    pub fn pow(&self, exp: &Nat) -> Result<Self> {
        let mut acc = Self::one(self.trunc());
        for bit in (0..exp.bits()).rev() {
            acc = acc.mul(&acc)?;
            if exp.bit(bit) {
                acc = acc.mul(self)?;
            }
        }
        Ok(acc)
    }
}

/// `Σ_{n<=T} q^n t^n`: one term per monic polynomial, weighted by degree.
pub fn zeta_series(q: u64, trunc: usize) -> TruncatedSeries {
    let coeffs = (0..=trunc as u64)
        .map(|n| BigInt::from(pow_nat(q, n)))
        .collect();
    TruncatedSeries::new(trunc, coeffs)
}

/// `Π_{d<=T} (1 - t^d)^(-π(d))`, truncated at `T`.
pub fn euler_product(census: &IrreducibleCensus, trunc: usize) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::one(trunc);
    for d in 1..=trunc {
        let count = census.count(d as u64)?;
        if count.is_zero() {
            continue;
        }
        let mut factor = vec![BigInt::zero(); trunc + 1];
        factor[0] = BigInt::one();
        factor[d] = -BigInt::one();
        let local = TruncatedSeries::new(trunc, factor).inverse()?;
        acc = acc.mul(&local.pow(count)?)?;
    }
    Ok(acc)
}

/// `c_n = n [t^n] log S` for `n = 1..=T`, via `c_n = n s_n - Σ_{j<n} c_j s_{n-j}`.
pub fn log_derivative_coeffs(series: &TruncatedSeries) -> Result<Vec<BigInt>> {
    let s = series.coeffs();
    if !s[0].is_one() {
        return Err(Error::NonUnitConstantTerm);
    }
    let mut c: Vec<BigInt> = Vec::with_capacity(series.trunc());
    for n in 1..=series.trunc() {
        let mut value = BigInt::from(n) * &s[n];
        for j in 1..n {
            value -= &c[j - 1] * &s[n - j];
        }
        c.push(value);
    }
    Ok(c)
}

/// Coefficient-by-coefficient comparison of the zeta series with its Euler
/// product, and of the logarithmic derivative with `q^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZetaReport {
    pub q: u64,
    pub terms: usize,
    pub zeta: Vec<String>,
    pub euler_product: Vec<String>,
    pub log_derivative: Vec<String>,
    pub product_matches: bool,
    pub log_derivative_matches: bool,
    pub passed: bool,
}

pub fn check_zeta(q: u64, trunc: usize, census: &IrreducibleCensus) -> Result<ZetaReport> {
    if census.q() != q {
        return Err(Error::MixedFields);
    }
    let zeta = zeta_series(q, trunc);
    let product = euler_product(census, trunc)?;
    let log_d = log_derivative_coeffs(&zeta)?;
    let expected: Vec<BigInt> = (1..=trunc as u64)
        .map(|n| BigInt::from(pow_nat(q, n)))
        .collect();
    let product_matches = zeta == product;
    let log_derivative_matches = log_d == expected && log_derivative_coeffs(&product)? == log_d;
    let show = |v: &[BigInt]| v.iter().map(ToString::to_string).collect();
    Ok(ZetaReport {
        q,
        terms: trunc,
        zeta: show(zeta.coeffs()),
        euler_product: show(product.coeffs()),
        log_derivative: show(&log_d),
        product_matches,
        log_derivative_matches,
        passed: product_matches && log_derivative_matches,
    })
}
