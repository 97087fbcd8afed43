use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::linalg;
use super::ring::{render_rational, Coeff, DivExact, Field};
use crate::error::{Error, Result};

/// The field generated by a primitive `order`-th root of unity `ζ`, in the
/// power basis `1, ζ, …, ζ^(φ(order)-1)` modulo the cyclotomic polynomial.
#[derive(Debug)]
pub struct CycloField {
    order: u32,
    degree: usize,
    modulus: Vec<i64>,
    // ζ^k reduced into the power basis, for k < max(order, 2·degree).
    powers: Vec<Vec<i64>>,
}

impl CycloField {
    /// Shared handle for the field of conductor `order`.
    pub fn get(order: u32) -> Arc<CycloField> {
        assert!(order >= 1, "cyclotomic conductor must be positive");
        static REGISTRY: OnceLock<Mutex<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
        let reg = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
        let mut map = reg.lock().unwrap();
        map.entry(order)
            .or_insert_with(|| Arc::new(CycloField::build(order)))
            .clone()
    }

    fn build(order: u32) -> CycloField {
        let modulus = cyclotomic_coeffs(order);
        let degree = modulus.len() - 1;
        let table_len = std::cmp::max(order as usize, 2 * degree);
        let mut powers = Vec::with_capacity(table_len);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        if degree == 0 {
            unreachable!("cyclotomic polynomial has positive degree");
        }
        for _ in 0..table_len {
            powers.push(cur.clone());
            // multiply by ζ: shift up and reduce the overflow coefficient
            let top = cur[degree - 1];
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..degree {
                    cur[i] -= top * modulus[i];
                }
            }
        }
        CycloField {
            order,
            degree,
            modulus,
            powers,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `φ(order)`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients of the cyclotomic polynomial, constant term first.
    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    /// `ζ^k` (any integer `k`) as an integer coefficient vector.
    pub fn zeta_power(&self, k: i64) -> &[i64] {
        let k = k.rem_euclid(self.order as i64) as usize;
        &self.powers[k]
    }

    fn reduce_i64(&self, wide: &[i64]) -> Vec<i64> {
        let mut out = wide[..self.degree.min(wide.len())].to_vec();
        out.resize(self.degree, 0);
        for (k, &c) in wide.iter().enumerate().skip(self.degree) {
            if c != 0 {
                for (o, p) in out.iter_mut().zip(&self.powers[k]) {
                    *o = o
                        .checked_add(c.checked_mul(*p).expect("cyclotomic integer overflow"))
                        .expect("cyclotomic integer overflow");
                }
            }
        }
        out
    }

    fn reduce_big(&self, wide: Vec<BigInt>) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = Vec::with_capacity(self.degree);
        let mut iter = wide.into_iter();
        for _ in 0..self.degree {
            out.push(iter.next().unwrap_or_else(BigInt::zero));
        }
        for (k, c) in iter.enumerate() {
            let k = k + self.degree;
            if !Zero::is_zero(&c) {
                for (o, &p) in out.iter_mut().zip(&self.powers[k]) {
                    if p != 0 {
                        *o += &c * p;
                    }
                }
            }
        }
        out
    }
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, constant first.
pub fn cyclotomic_coeffs(n: u32) -> Vec<i64> {
    // X^n - 1 divided by every Φ_d with d | n, d < n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = divide_monic(&num, &cyclotomic_coeffs(d));
        }
    }
    num
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut q = vec![0i64; nd - dd + 1];
    for i in (0..=nd - dd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for j in 0..=dd {
                rem[i + j] -= c * den[j];
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Exact element of a cyclotomic field with rational coefficients.
///
/// Canonical form: `num / den` with `den > 0` and `gcd(num…, den) = 1`, so
/// equality is component-wise.
#[derive(Clone)]
pub struct CycloNumber {
    field: Arc<CycloField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycloNumber {
    pub fn zero(field: &Arc<CycloField>) -> Self {
        CycloNumber {
            field: field.clone(),
            num: vec![BigInt::zero(); field.degree],
            den: BigInt::one(),
        }
    }

    pub fn one(field: &Arc<CycloField>) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: &Arc<CycloField>, n: i64) -> Self {
        let mut z = Self::zero(field);
        z.num[0] = BigInt::from(n);
        z
    }

    pub fn from_bigint(field: &Arc<CycloField>, n: BigInt) -> Self {
        let mut z = Self::zero(field);
        z.num[0] = n;
        z
    }

    pub fn from_rational(field: &Arc<CycloField>, r: &BigRational) -> Self {
        let mut z = Self::zero(field);
        z.num[0] = r.numer().clone();
        z.den = r.denom().clone();
        z.normalize();
        z
    }

    /// `ζ^k`.
    pub fn zeta(field: &Arc<CycloField>, k: i64) -> Self {
        Self::from_int_vec(field, field.zeta_power(k))
    }

    pub fn from_int_vec(field: &Arc<CycloField>, coeffs: &[i64]) -> Self {
        assert_eq!(coeffs.len(), field.degree);
        CycloNumber {
            field: field.clone(),
            num: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            den: BigInt::one(),
        }
    }

    /// Build from rational coefficients in the power basis (reduced input).
    pub fn from_rationals(field: &Arc<CycloField>, coeffs: &[BigRational]) -> Self {
        assert_eq!(coeffs.len(), field.degree);
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let mut z = CycloNumber {
            field: field.clone(),
            num,
            den,
        };
        z.normalize();
        z
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if self.num.iter().all(|c| Zero::is_zero(c)) {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.field.order != other.field.order {
            return Err(Error::usage(format!(
                "cyclotomic conductor mismatch: {} vs {}",
                self.field.order, other.field.order
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut num = Vec::with_capacity(self.num.len());
        if self.den == other.den {
            for (a, b) in self.num.iter().zip(&other.num) {
                num.push(a + b);
            }
            let mut z = CycloNumber {
                field: self.field.clone(),
                num,
                den: self.den.clone(),
            };
            z.normalize();
            return Ok(z);
        }
        for (a, b) in self.num.iter().zip(&other.num) {
            num.push(a * &other.den + b * &self.den);
        }
        let mut z = CycloNumber {
            field: self.field.clone(),
            num,
            den: &self.den * &other.den,
        };
        z.normalize();
        Ok(z)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let d = self.field.degree;
        let mut wide = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !Zero::is_zero(b) {
                    wide[i + j] += a * b;
                }
            }
        }
        let mut z = CycloNumber {
            field: self.field.clone(),
            num: self.field.reduce_big(wide),
            den: &self.den * &other.den,
        };
        z.normalize();
        Ok(z)
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        let mut z = CycloNumber {
            field: self.field.clone(),
            num: self.num.iter().map(|c| c * r.numer()).collect(),
            den: &self.den * r.denom(),
        };
        z.normalize();
        z
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| Zero::is_zero(c))
    }

    pub fn is_rational(&self) -> bool {
        self.num.iter().skip(1).all(|c| Zero::is_zero(c))
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        (self.is_rational() && self.den.is_one()).then(|| self.num[0].clone())
    }

    /// Coefficients in the power basis.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    /// True when every power-basis coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn integer_coeffs(&self) -> Option<Vec<i64>> {
        if !self.den.is_one() {
            return None;
        }
        self.num.iter().map(|c| c.to_i64()).collect()
    }

    /// Complex conjugate (`ζ -> ζ^-1`).
    pub fn conj(&self) -> Self {
        let m = self.field.order as i64;
        let mut wide = vec![BigInt::zero(); self.field.degree];
        for (k, c) in self.num.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            for (w, &p) in wide.iter_mut().zip(self.field.zeta_power(m - k as i64)) {
                if p != 0 {
                    *w += c * p;
                }
            }
        }
        let mut z = CycloNumber {
            field: self.field.clone(),
            num: wide,
            den: self.den.clone(),
        };
        z.normalize();
        z
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.field.degree;
        // Column j holds the coordinates of self · ζ^j.
        let mut cols = Vec::with_capacity(d);
        for j in 0..d {
            let prod = self.mul_ref(&Self::zeta(&self.field, j as i64));
            cols.push(prod.coefficients());
        }
        let matrix: Vec<Vec<BigRational>> = (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect();
        let mut rhs = vec![BigRational::zero(); d];
        rhs[0] = BigRational::one();
        let sol = linalg::solve(matrix, rhs)?;
        Some(Self::from_rationals(&self.field, &sol))
    }

    /// Numerical value under `ζ -> exp(2πi·j/order)`.
    pub fn embed(&self, j: u32) -> Complex64 {
        let m = self.field.order as f64;
        let den = self.den.to_f64().unwrap();
        self.num
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let ang = 2.0 * std::f64::consts::PI * (j as f64) * (k as f64) / m;
                Complex64::from_polar(c.to_f64().unwrap() / den, ang)
            })
            .sum()
    }

    /// Total order on canonical forms: coefficient vectors compared
    /// lexicographically as rationals. Used for deterministic sorting only.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        for (a, b) in self.num.iter().zip(&other.num) {
            let l = a * &other.den;
            let r = b * &self.den;
            match l.cmp(&r) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    fn rendered_terms(&self) -> Vec<(bool, String)> {
        let m = self.field.order;
        let mut terms = Vec::new();
        for (k, c) in self.num.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let r = BigRational::new(c.clone(), self.den.clone());
            let neg = r.is_negative();
            let a = r.abs();
            let atom = match k {
                0 => String::new(),
                1 => format!("E({m})"),
                _ => format!("E({m})^{k}"),
            };
            let body = if k == 0 {
                render_rational(&a)
            } else if a.is_one() {
                atom
            } else {
                format!("{}*{}", render_rational(&a), atom)
            };
            terms.push((neg, body));
        }
        terms
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.den == other.den && self.num == other.num
    }
}
impl Eq for CycloNumber {}

impl Hash for CycloNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&Coeff::render(self))
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&Coeff::render(self))
    }
}

impl Coeff for CycloNumber {
    fn is_zero(&self) -> bool {
        CycloNumber::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Self::zero(&self.field)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.field)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.try_add(other).expect("cyclotomic conductor mismatch")
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.try_sub(other).expect("cyclotomic conductor mismatch")
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.try_mul(other).expect("cyclotomic conductor mismatch")
    }
    fn neg_ref(&self) -> Self {
        CycloNumber {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Self::from_int(&self.field, n)
    }
    /// `3`, `-1/2`, `-1+E(5)^2-1/3*E(5)^3`.
    fn render(&self) -> String {
        let terms = self.rendered_terms();
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (neg, body)) in terms.into_iter().enumerate() {
            if neg {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            out.push_str(&body);
        }
        out
    }
    fn is_atomic(&self) -> bool {
        self.num.iter().filter(|c| !Zero::is_zero(*c)).count() <= 1
    }
}

impl DivExact for CycloNumber {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        Some(self.mul_ref(&divisor.inverse()?))
    }
}

impl Field for CycloNumber {
    fn inv(&self) -> Option<Self> {
        self.inverse()
    }
}

/// Element of `Z[ζ]` with machine-word coefficients.
///
/// The fast path for group matrices and Hecke traces, whose entries are
/// algebraic integers of small height. Overflow panics rather than wraps.
#[derive(Clone)]
pub struct CycloInt {
    field: Arc<CycloField>,
    c: Vec<i64>,
}

impl CycloInt {
    pub fn zero(field: &Arc<CycloField>) -> Self {
        CycloInt {
            field: field.clone(),
            c: vec![0; field.degree],
        }
    }

    pub fn from_int(field: &Arc<CycloField>, n: i64) -> Self {
        let mut z = Self::zero(field);
        z.c[0] = n;
        z
    }

    pub fn zeta(field: &Arc<CycloField>, k: i64) -> Self {
        CycloInt {
            field: field.clone(),
            c: field.zeta_power(k).to_vec(),
        }
    }

    pub fn from_coeffs(field: &Arc<CycloField>, c: Vec<i64>) -> Self {
        assert_eq!(c.len(), field.degree);
        CycloInt {
            field: field.clone(),
            c,
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.c
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn to_cyclo(&self) -> CycloNumber {
        CycloNumber::from_int_vec(&self.field, &self.c)
    }

    pub fn from_cyclo(x: &CycloNumber) -> Option<Self> {
        Some(CycloInt {
            field: x.field.clone(),
            c: x.integer_coeffs()?,
        })
    }

    pub fn scale_int(&self, k: i64) -> Self {
        CycloInt {
            field: self.field.clone(),
            c: self
                .c
                .iter()
                .map(|x| x.checked_mul(k).expect("cyclotomic integer overflow"))
                .collect(),
        }
    }

    /// The same number in a field whose conductor is a multiple of ours.
    pub fn lift(&self, target: &Arc<CycloField>) -> Result<Self> {
        let (m, n) = (self.field.order, target.order);
        if n % m != 0 {
            return Err(Error::usage(format!("cannot embed conductor {m} into conductor {n}")));
        }
        let step = (n / m) as i64;
        let mut out = Self::zero(target);
        for (k, &c) in self.c.iter().enumerate() {
            if c != 0 {
                let z = target.zeta_power(k as i64 * step);
                for (o, &p) in out.c.iter_mut().zip(z) {
                    *o = o
                        .checked_add(c.checked_mul(p).expect("cyclotomic integer overflow"))
                        .expect("cyclotomic integer overflow");
                }
            }
        }
        Ok(out)
    }

    pub fn add_scaled_assign(&mut self, other: &Self, k: i64) {
        for (a, b) in self.c.iter_mut().zip(&other.c) {
            *a = a
                .checked_add(b.checked_mul(k).expect("cyclotomic integer overflow"))
                .expect("cyclotomic integer overflow");
        }
    }
}

impl PartialEq for CycloInt {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.c == other.c
    }
}
impl Eq for CycloInt {}

impl Hash for CycloInt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.c.hash(state);
    }
}

impl fmt::Debug for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&Coeff::render(&self.to_cyclo()))
    }
}

impl Coeff for CycloInt {
    fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }
    fn zero_like(&self) -> Self {
        Self::zero(&self.field)
    }
    fn one_like(&self) -> Self {
        Self::from_int(&self.field, 1)
    }
    fn add_ref(&self, other: &Self) -> Self {
        assert_eq!(self.field.order, other.field.order, "cyclotomic conductor mismatch");
        let mut z = self.clone();
        z.add_scaled_assign(other, 1);
        z
    }
    fn sub_ref(&self, other: &Self) -> Self {
        assert_eq!(self.field.order, other.field.order, "cyclotomic conductor mismatch");
        let mut z = self.clone();
        z.add_scaled_assign(other, -1);
        z
    }
    fn mul_ref(&self, other: &Self) -> Self {
        assert_eq!(self.field.order, other.field.order, "cyclotomic conductor mismatch");
        let d = self.field.degree;
        let mut wide = vec![0i64; 2 * d - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                if b != 0 {
                    wide[i + j] = wide[i + j]
                        .checked_add(a.checked_mul(b).expect("cyclotomic integer overflow"))
                        .expect("cyclotomic integer overflow");
                }
            }
        }
        CycloInt {
            field: self.field.clone(),
            c: self.field.reduce_i64(&wide),
        }
    }
    fn neg_ref(&self) -> Self {
        self.scale_int(-1)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Self::from_int(&self.field, n)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        self.add_scaled_assign(other, 1);
    }
    fn render(&self) -> String {
        Coeff::render(&self.to_cyclo())
    }
    fn is_atomic(&self) -> bool {
        self.c.iter().filter(|&&x| x != 0).count() <= 1
    }
}

impl DivExact for CycloInt {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let q = self.to_cyclo().div_exact(&divisor.to_cyclo())?;
        CycloInt::from_cyclo(&q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_coeffs(1), vec![-1, 1]);
        assert_eq!(cyclotomic_coeffs(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_coeffs(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_coeffs(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_coeffs(30).len() - 1, 8);
        assert_eq!(cyclotomic_coeffs(60).len() - 1, 16);
    }

    #[test]
    fn golden_ratio_from_fifth_roots() {
        let f = CycloField::get(5);
        let g = CycloNumber::zeta(&f, 1).add_ref(&CycloNumber::zeta(&f, 4));
        // g = (√5 − 1)/2 satisfies g² + g − 1 = 0
        let lhs = g.mul_ref(&g).add_ref(&g);
        assert_eq!(lhs, CycloNumber::one(&f));
        assert!((g.embed(1).re - (5f64.sqrt() - 1.0) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn conductor_mismatch_is_usage_error() {
        let a = CycloNumber::one(&CycloField::get(5));
        let b = CycloNumber::one(&CycloField::get(7));
        assert!(matches!(a.try_add(&b), Err(Error::Usage(_))));
    }

    #[test]
    fn inverse_and_conjugate() {
        let f = CycloField::get(12);
        let x = CycloNumber::from_int(&f, 2).add_ref(&CycloNumber::zeta(&f, 1));
        let inv = x.inverse().unwrap();
        assert_eq!(x.mul_ref(&inv), CycloNumber::one(&f));
        let z = CycloNumber::zeta(&f, 5);
        assert_eq!(z.conj(), CycloNumber::zeta(&f, 7));
        assert!(CycloNumber::zero(&f).inverse().is_none());
    }

    #[test]
    fn rendering() {
        let f = CycloField::get(5);
        let half = BigRational::new(BigInt::from(-1), BigInt::from(2));
        assert_eq!(Coeff::render(&CycloNumber::from_rational(&f, &half)), "-1/2");
        let g = CycloNumber::zeta(&f, 1).add_ref(&CycloNumber::zeta(&f, 4));
        assert_eq!(Coeff::render(&g), "-1-E(5)^2-E(5)^3");
    }

    #[test]
    fn cyclo_int_matches_cyclo_number() {
        let f = CycloField::get(30);
        let a = CycloInt::zeta(&f, 7).add_ref(&CycloInt::from_int(&f, 3));
        let b = CycloInt::zeta(&f, 11).sub_ref(&CycloInt::zeta(&f, 2));
        assert_eq!(a.mul_ref(&b).to_cyclo(), a.to_cyclo().mul_ref(&b.to_cyclo()));
    }
}
