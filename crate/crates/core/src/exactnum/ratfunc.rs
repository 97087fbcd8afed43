use super::laurent::LaurentPoly;
use super::ring::{Coeff, Field};
use crate::error::{Error, Result};

/// Quotient of Laurent polynomials over a field.
///
/// Normal form: the denominator has valuation 0 and leading coefficient 1,
/// and common factors found by a polynomial gcd are cancelled.
#[derive(Clone, Debug)]
pub struct RationalFunction<T: Coeff> {
    num: LaurentPoly<T>,
    den: LaurentPoly<T>,
}

impl<T: Field> RationalFunction<T> {
    pub fn new(num: LaurentPoly<T>, den: LaurentPoly<T>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::usage("rational function with zero denominator"));
        }
        let mut r = RationalFunction { num, den };
        r.normalize();
        Ok(r)
    }

    pub fn from_poly(p: LaurentPoly<T>, one: T) -> Self {
        RationalFunction {
            num: p,
            den: LaurentPoly::constant(one),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly<T> {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly<T> {
        &self.den
    }

    fn normalize(&mut self) {
        let shift = -self.den.valuation().unwrap();
        self.den = self.den.shift(shift);
        self.num = self.num.shift(shift);
        if self.num.is_zero() {
            self.den = LaurentPoly::constant(self.den.leading().unwrap().one_like());
            return;
        }
        let g = poly_gcd(&self.num, &self.den);
        if g.degree().unwrap_or(0) > 0 {
            self.num = self.num.exact_divide(&g).expect("gcd divides numerator");
            self.den = self.den.exact_divide(&g).expect("gcd divides denominator");
        }
        let lead_inv = self.den.leading().unwrap().inv().unwrap();
        self.den = self.den.scale(&lead_inv);
        self.num = self.num.scale(&lead_inv);
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            let mut r = RationalFunction {
                num: &self.num + &other.num,
                den: self.den.clone(),
            };
            r.normalize();
            return r;
        }
        let g = poly_gcd(&self.den, &other.den);
        let a = other.den.exact_divide(&g).unwrap();
        let b = self.den.exact_divide(&g).unwrap();
        let mut r = RationalFunction {
            num: &(&self.num * &a) + &(&other.num * &b),
            den: &self.den * &a,
        };
        r.normalize();
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = RationalFunction {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        };
        r.normalize();
        r
    }

    pub fn mul_poly(&self, p: &LaurentPoly<T>) -> Self {
        let mut r = RationalFunction {
            num: &self.num * p,
            den: self.den.clone(),
        };
        r.normalize();
        r
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Cross-multiplied equality.
    pub fn equals(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// The polynomial this function equals; internal error if it is not one.
    pub fn into_polynomial(self) -> Result<LaurentPoly<T>> {
        self.num.exact_divide(&self.den)
    }
}

/// Remainder of `a` by `b` as ordinary polynomials (valuations ignored).
fn poly_rem<T: Field>(a: &LaurentPoly<T>, b: &LaurentPoly<T>) -> LaurentPoly<T> {
    let mut r = a.shift(-a.valuation().unwrap_or(0));
    let b = b.shift(-b.valuation().unwrap());
    let bd = b.degree().unwrap();
    let lead_inv = b.leading().unwrap().inv().unwrap();
    while let Some(rd) = r.degree() {
        if rd < bd {
            break;
        }
        let c = r.leading().unwrap().mul_ref(&lead_inv);
        r = &r - &b.scale(&c).shift(rd - bd);
    }
    r
}

/// Monic gcd of two nonzero polynomials, ignoring monomial factors.
pub fn poly_gcd<T: Field>(a: &LaurentPoly<T>, b: &LaurentPoly<T>) -> LaurentPoly<T> {
    let mut x = a.shift(-a.valuation().unwrap());
    let mut y = b.shift(-b.valuation().unwrap());
    while !y.is_zero() {
        let r = poly_rem(&x, &y);
        x = y;
        y = if r.is_zero() {
            r
        } else {
            r.shift(-r.valuation().unwrap())
        };
    }
    let inv = x.leading().unwrap().inv().unwrap();
    x.scale(&inv)
}
