use std::cmp::{max, min};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::ring::{Coeff, DivExact};
use crate::error::{Error, Result};

/// Laurent polynomial in one indeterminate with exact coefficients.
///
/// Stored densely from the valuation up to the degree: `coeffs[i]` is the
/// coefficient of `X^(low + i)`. The first and last stored coefficients are
/// nonzero; the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPoly<T> {
    low: i32,
    coeffs: Vec<T>,
}

impl<T: Coeff> LaurentPoly<T> {
    pub fn zero() -> Self {
        LaurentPoly {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn monomial(c: T, exp: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: exp,
            coeffs: vec![c],
        }
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds `sum coeffs[i] X^(low+i)`, trimming zeros at both ends.
    pub fn from_coeffs(low: i32, coeffs: Vec<T>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i32, T)>>(terms: I) -> Self {
        let mut acc = Self::zero();
        for (e, c) in terms {
            acc = &acc + &Self::monomial(c, e);
        }
        acc
    }

    fn trim(&mut self) {
        let first = self.coeffs.iter().position(|c| !c.is_zero());
        match first {
            None => {
                self.coeffs.clear();
                self.low = 0;
            }
            Some(f) => {
                let last = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
                self.coeffs.truncate(last + 1);
                if f > 0 {
                    self.coeffs.drain(..f);
                    self.low += f as i32;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn degree(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, exp: i32) -> Option<&T> {
        let i = exp.checked_sub(self.low)?;
        if i < 0 {
            return None;
        }
        self.coeffs.get(i as usize).filter(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &T)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i32, c))
    }

    /// Raw dense view: `(valuation, coefficients)`.
    pub fn dense(&self) -> (i32, &[T]) {
        (self.low, &self.coeffs)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.low, self.coeffs.iter().map(|x| x.mul_ref(c)).collect())
    }

    /// Multiplies by `X^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// `X -> X^-1`.
    pub fn bar(&self) -> Self {
        match self.degree() {
            None => Self::zero(),
            Some(d) => LaurentPoly {
                low: -d,
                coeffs: self.coeffs.iter().rev().cloned().collect(),
            },
        }
    }

    /// `X -> X^2`; turns a polynomial in `q` into one in `v` with `q = v^2`.
    pub fn substitute_square(&self) -> Self {
        let Some(first) = self.coeffs.first() else {
            return Self::zero();
        };
        let zero = first.zero_like();
        let mut out = Vec::with_capacity(self.coeffs.len() * 2);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                out.push(zero.clone());
            }
            out.push(c.clone());
        }
        LaurentPoly {
            low: 2 * self.low,
            coeffs: out,
        }
    }

    /// True iff every exponent with a nonzero coefficient is even, i.e. the
    /// polynomial lies in the subring generated by `X^2, X^-2`.
    pub fn even_parity(&self) -> bool {
        self.terms().all(|(e, _)| e % 2 == 0)
    }

    /// Sum of the coefficients (value at `X = 1`).
    pub fn eval_at_one(&self) -> Option<T> {
        let first = self.coeffs.first()?;
        Some(self.coeffs.iter().fold(first.zero_like(), |acc, c| acc.add_ref(c)))
    }

    pub fn map_coeffs<U: Coeff>(&self, f: impl Fn(&T) -> U) -> LaurentPoly<U> {
        LaurentPoly::from_coeffs(self.low, self.coeffs.iter().map(f).collect())
    }

    /// Palindromicity: `Some(u)` iff `P(X^-1) = X^-u P(X)`; then
    /// `u = valuation + degree`.
    pub fn is_palindromic(&self) -> Result<Option<i32>> {
        if self.is_zero() {
            return Err(Error::usage("palindromicity of the zero polynomial"));
        }
        if self.low < 0 {
            return Err(Error::usage(
                "palindromicity is defined for polynomials with nonnegative exponents",
            ));
        }
        let n = self.coeffs.len();
        let symmetric = (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i]);
        Ok(symmetric.then(|| self.low + self.degree().unwrap()))
    }

    /// Canonical text, exponents ascending: `v^-2 + 2 + v^2`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms().enumerate() {
            let one = c.one_like();
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            let (neg, body) = if e != 0 && *c == one {
                (false, mono)
            } else if e != 0 && *c == one.neg_ref() {
                (true, mono)
            } else if c.is_atomic() {
                let s = c.render();
                match s.strip_prefix('-') {
                    Some(rest) => (true, format!("{rest}{mono}")),
                    None => (false, format!("{s}{mono}")),
                }
            } else if e == 0 {
                (false, format!("({})", c.render()))
            } else {
                (false, format!("({}){mono}", c.render()))
            };
            match (k, neg) {
                (0, false) => out.push_str(&body),
                (0, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        out
    }
}

impl<T: DivExact> LaurentPoly<T> {
    /// Exact quotient `num / den`; fails unless `num = q * den` for a Laurent
    /// polynomial `q`. Failure is reported as an internal inconsistency since
    /// every caller expects divisibility.
    pub fn exact_divide(&self, den: &Self) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::usage("division by the zero polynomial"));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let lead = den.leading().unwrap();
        let den_deg = den.degree().unwrap();
        let den_low = den.low;
        let mut rem = self.clone();
        let mut quot: Vec<(i32, T)> = Vec::new();
        // Long division from the top; the quotient's valuation is fixed by
        // the valuations, so stop once the remainder drops below it.
        let min_q = self.low - den_low;
        while let Some(rd) = rem.degree() {
            let qe = rd - den_deg;
            if qe < min_q {
                break;
            }
            let qc = rem
                .leading()
                .unwrap()
                .div_exact(lead)
                .ok_or_else(|| Error::internal("inexact polynomial division"))?;
            rem = &rem - &den.scale(&qc).shift(qe);
            quot.push((qe, qc));
        }
        if !rem.is_zero() {
            return Err(Error::internal(format!(
                "inexact polynomial division: remainder of degree {}",
                rem.degree().unwrap()
            )));
        }
        Ok(Self::from_terms(quot))
    }
}

impl<T: Coeff> fmt::Debug for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("v"))
    }
}

fn combine<T: Coeff>(
    a: &LaurentPoly<T>,
    b: &LaurentPoly<T>,
    op: impl Fn(&T, &T) -> T,
    neg_b: impl Fn(&T) -> T,
) -> LaurentPoly<T> {
    if a.is_zero() {
        return LaurentPoly::from_coeffs(b.low, b.coeffs.iter().map(&neg_b).collect());
    }
    if b.is_zero() {
        return a.clone();
    }
    let zero = a.coeffs[0].zero_like();
    let lo = min(a.low, b.low);
    let hi = max(a.degree().unwrap(), b.degree().unwrap());
    let mut out = Vec::with_capacity((hi - lo + 1) as usize);
    for e in lo..=hi {
        let x = a.coeff_dense(e).unwrap_or(&zero);
        let y = b.coeff_dense(e).unwrap_or(&zero);
        out.push(op(x, y));
    }
    LaurentPoly::from_coeffs(lo, out)
}

impl<T: Coeff> LaurentPoly<T> {
    fn coeff_dense(&self, exp: i32) -> Option<&T> {
        let i = exp - self.low;
        if i < 0 {
            None
        } else {
            self.coeffs.get(i as usize)
        }
    }
}

impl<T: Coeff> Add for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, rhs: Self) -> LaurentPoly<T> {
        combine(self, rhs, |x, y| x.add_ref(y), |y| y.clone())
    }
}

impl<T: Coeff> Sub for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, rhs: Self) -> LaurentPoly<T> {
        combine(self, rhs, |x, y| x.sub_ref(y), |y| y.neg_ref())
    }
}

impl<T: Coeff> Mul for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, rhs: Self) -> LaurentPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j].add_assign_ref(&x.mul_ref(y));
                }
            }
        }
        LaurentPoly::from_coeffs(self.low + rhs.low, out)
    }
}

impl<T: Coeff> Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coeff> $tr for LaurentPoly<T> {
            type Output = LaurentPoly<T>;
            fn $m(self, rhs: Self) -> LaurentPoly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Coeff> Neg for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        -&self
    }
}

impl<T: Coeff> Coeff for LaurentPoly<T> {
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        match self.coeffs.first() {
            Some(c) => Self::constant(c.one_like()),
            None => panic!("one_like on an empty polynomial has no coefficient context"),
        }
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
        match self.coeffs.first() {
            Some(c) => Self::constant(c.from_i64_like(n)),
            None => panic!("from_i64_like on an empty polynomial has no coefficient context"),
        }
    }
    fn render(&self) -> String {
        self.render("v")
    }
    fn is_atomic(&self) -> bool {
        self.coeffs.len() <= 1
    }
}

impl LaurentPoly<i64> {
    pub fn from_i64(low: i32, coeffs: &[i64]) -> Self {
        Self::from_coeffs(low, coeffs.to_vec())
    }

    /// `v + v^-1`.
    pub fn v_plus_v_inv() -> Self {
        Self::from_coeffs(-1, vec![1, 0, 1])
    }
}
