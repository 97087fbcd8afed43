use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficient ring for [`LaurentPoly`](super::LaurentPoly).
///
/// Values carry enough context to build their own zero and one (cyclotomic
/// numbers need their field), hence the `_like` constructors instead of
/// `num_traits::Zero`.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_i64_like(&self, n: i64) -> Self;

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }

    /// Canonical text used by the polynomial renderer.
    fn render(&self) -> String;

    /// True when `render` yields a single signed atom (no inner `+`/`-`),
    /// so it can be printed next to a monomial without parentheses.
    fn is_atomic(&self) -> bool {
        true
    }
}

/// Exact division: `Some(q)` with `q * divisor == self`, if such `q` exists.
pub trait DivExact: Coeff {
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

/// Coefficient rings where every nonzero element is invertible.
pub trait Field: DivExact {
    fn inv(&self) -> Option<Self>;
}

impl Coeff for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn zero_like(&self) -> Self {
        0
    }
    fn one_like(&self) -> Self {
        1
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.checked_add(*other).expect("i64 overflow in exact arithmetic")
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.checked_sub(*other).expect("i64 overflow in exact arithmetic")
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.checked_mul(*other).expect("i64 overflow in exact arithmetic")
    }
    fn neg_ref(&self) -> Self {
        self.checked_neg().expect("i64 overflow in exact arithmetic")
    }
    fn from_i64_like(&self, n: i64) -> Self {
        n
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl DivExact for i64 {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if *divisor == 0 || self % divisor != 0 {
            None
        } else {
            Some(self / divisor)
        }
    }
}

impl Coeff for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_i64_like(&self, n: i64) -> Self {
        BigInt::from(n)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl DivExact for BigInt {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if Zero::is_zero(divisor) {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        Zero::is_zero(&r).then_some(q)
    }
}

impl Coeff for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_i64_like(&self, n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn render(&self) -> String {
        render_rational(self)
    }
}

impl DivExact for BigRational {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        (!Zero::is_zero(divisor)).then(|| self / divisor)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

/// `3`, `-1/2`.
pub fn render_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
