//! Exact finite-field construction over `F_p[x]`, monic irreducible polynomial
//! census, and the counting identities tying them together: the product of all
//! monic polynomials of a given degree, Gauss's relation, the formal zeta
//! function and its Euler product, plus the integer-side central binomial
//! valuations and a Bertrand's postulate scan.
//!
//! Every value is exact. Polynomials are dense and little-endian; monic
//! polynomials of degree `d` are enumerated in a single canonical order where
//! the index's base-`q` digits are the lower coefficients.

pub mod arith;
pub mod bertrand;
mod error;
pub mod extension;
pub mod field;
pub mod identity;
pub mod irreducibles;
pub mod poly;
pub mod prime_field;
pub mod series;

pub use error::{Error, Result};
pub use extension::{ExtElement, ExtensionField, SearchStrategy};
pub use field::{AnyField, CoefficientField, FieldDescriptor};
pub use irreducibles::IrreducibleCensus;
pub use poly::{Degree, Poly};
pub use prime_field::{FpElement, PrimeField};
pub use series::TruncatedSeries;
