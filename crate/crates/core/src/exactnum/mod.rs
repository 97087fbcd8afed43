//! Exact arithmetic: cyclotomic fields, Laurent polynomials, rational
//! functions and a little rational linear algebra.
//!
//! Nothing here rounds. Floating point only appears in
//! [`CycloNumber::embed`], which exists for numerical sanity checks.

mod cyclo;
mod laurent;
pub mod linalg;
mod ratfunc;
mod ring;

pub use cyclo::{cyclotomic_coeffs, CycloField, CycloInt, CycloNumber};
pub use laurent::LaurentPoly;
pub use ratfunc::{poly_gcd, RationalFunction};
pub use ring::{render_rational, Coeff, DivExact, Field};

use num_bigint::BigInt;

/// Integer Laurent polynomial; the coefficient type of KL data.
pub type IntPoly = LaurentPoly<i64>;

/// `n`-th cyclotomic polynomial as an integer polynomial.
pub fn cyclotomic_poly(n: u32) -> LaurentPoly<BigInt> {
    LaurentPoly::from_coeffs(0, cyclotomic_coeffs(n).into_iter().map(BigInt::from).collect())
}

/// `1 + X + … + X^(d-1)`.
pub fn q_integer(d: u32) -> LaurentPoly<BigInt> {
    LaurentPoly::from_coeffs(0, vec![BigInt::from(1); d as usize])
}
