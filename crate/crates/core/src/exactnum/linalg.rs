//! Dense exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type RatMatrix = Vec<Vec<BigRational>>;

/// Solves `a · x = b` for square nonsingular `a`; `None` if singular.
pub fn solve(a: RatMatrix, b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let cols = b.into_iter().map(|x| vec![x]).collect();
    solve_multi(a, cols).map(|x| x.into_iter().map(|mut r| r.remove(0)).collect())
}

/// Solves `a · X = b` with `b` given row-major (`n × k`).
pub fn solve_multi(mut a: RatMatrix, mut b: RatMatrix) -> Option<RatMatrix> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut().skip(col) {
            *x = &*x * &inv;
        }
        for x in b[col].iter_mut() {
            *x = &*x * &inv;
        }
        let prow = a[col].clone();
        let brow = b[col].clone();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for (x, p) in a[r].iter_mut().zip(&prow).skip(col) {
                if !p.is_zero() {
                    *x = &*x - &f * p;
                }
            }
            for (x, p) in b[r].iter_mut().zip(&brow) {
                if !p.is_zero() {
                    *x = &*x - &f * p;
                }
            }
        }
    }
    Some(b)
}

pub fn inverse(a: RatMatrix) -> Option<RatMatrix> {
    let n = a.len();
    let id = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    solve_multi(a, id)
}

/// Solves `a · X = b` over `Q` for integer `a` (square) and `b` (`n × k`):
/// solutions mod a sequence of word-size primes, combined by CRT and
/// rational reconstruction, accepted only after an exact check.
/// `None` if `a` is singular mod every prime tried.
pub fn solve_integer(a: &[Vec<i64>], b: &[Vec<i64>]) -> Option<RatMatrix> {
    let n = a.len();
    let k = b.first().map_or(0, |r| r.len());
    let mut modulus = BigInt::one();
    let mut residues: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); k]; n];
    let mut singular = 0;
    let mut used = 0;
    let mut p: u64 = (1 << 31) - 1;
    while singular < 8 && used < 400 {
        p = prev_prime(p);
        let Some(x) = solve_mod(a, b, p) else {
            singular += 1;
            continue;
        };
        used += 1;
        let pb = BigInt::from(p);
        let inv = modulus.mod_floor(&pb).modpow(&(&pb - 2u32), &pb);
        for (row, xr) in residues.iter_mut().zip(&x) {
            for (r, &xi) in row.iter_mut().zip(xr) {
                // r ← r + M·((x − r)·M⁻¹ mod p)
                let t = ((BigInt::from(xi) - &*r).mod_floor(&pb) * &inv).mod_floor(&pb);
                *r += &modulus * t;
            }
        }
        modulus *= &pb;
        if used % 2 == 1 && used > 1 {
            continue;
        }
        let Some(sol) = reconstruct_all(&residues, &modulus) else {
            continue;
        };
        if verify(a, b, &sol) {
            return Some(sol);
        }
    }
    None
}

fn prev_prime(mut p: u64) -> u64 {
    loop {
        p -= 1;
        if p < 3 {
            panic!("ran out of primes");
        }
        if (2..).take_while(|d| d * d <= p).all(|d| p % d != 0) {
            return p;
        }
    }
}

fn solve_mod(a: &[Vec<i64>], b: &[Vec<i64>], p: u64) -> Option<Vec<Vec<u64>>> {
    let n = a.len();
    let k = b.first().map_or(0, |r| r.len());
    let red = |x: i64| x.rem_euclid(p as i64) as u64;
    let mut m: Vec<Vec<u64>> = a
        .iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().chain(rb).map(|&x| red(x)).collect())
        .collect();
    let w = n + k;
    let pow = |mut x: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = r * x % p;
            }
            x = x * x % p;
            e >>= 1;
        }
        r
    };
    for col in 0..n {
        let piv = (col..n).find(|&r| m[r][col] != 0)?;
        m.swap(col, piv);
        let inv = pow(m[col][col], p - 2);
        for x in m[col][col..].iter_mut() {
            *x = *x * inv % p;
        }
        let prow = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col] == 0 {
                continue;
            }
            let f = p - row[col];
            for c in col..w {
                if prow[c] != 0 {
                    row[c] = (row[c] + f * prow[c]) % p;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// `a/b ≡ u (mod m)` with `|a|, b ≤ √(m/2)`.
fn rational_reconstruct(u: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

fn reconstruct_all(residues: &[Vec<BigInt>], m: &BigInt) -> Option<RatMatrix> {
    residues
        .iter()
        .map(|row| row.iter().map(|u| rational_reconstruct(u, m)).collect())
        .collect()
}

fn verify(a: &[Vec<i64>], b: &[Vec<i64>], x: &RatMatrix) -> bool {
    let k = b.first().map_or(0, |r| r.len());
    for c in 0..k {
        let den = x.iter().fold(BigInt::one(), |acc, r| acc.lcm(r[c].denom()));
        let y: Vec<BigInt> = x.iter().map(|r| r[c].numer() * (&den / r[c].denom())).collect();
        for (ra, rb) in a.iter().zip(b) {
            let mut s = BigInt::zero();
            for (&aij, yj) in ra.iter().zip(&y) {
                if aij != 0 && !yj.is_zero() {
                    s += yj * aij;
                }
            }
            if s != &den * rb[c] {
                return false;
            }
        }
    }
    true
}
