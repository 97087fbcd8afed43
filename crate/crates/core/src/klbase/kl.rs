use std::collections::HashMap;

use crate::coxeter::{Elem, GroupTable};
use crate::exactnum::IntPoly;

const NONE: u32 = u32::MAX;

/// Kazhdan–Lusztig polynomials `P_{x,y}` (in `q = v²`) and `μ(x,y)` for a
/// fully enumerated group.
///
/// Polynomials are interned in a pool; `index[y·n + x]` points into it and
/// is `NONE` when `x ≰ y`, so the store doubles as the Bruhat order.
#[derive(Clone, Debug, PartialEq)]
pub struct KLStore {
    pub(crate) n: usize,
    pub(crate) fingerprint: String,
    pub(crate) pool: Vec<IntPoly>,
    pub(crate) index: Vec<u32>,
    /// Per `y`: `(x, μ(x,y))` for `x < y` with `μ ≠ 0`, ascending in `x`.
    pub(crate) mu: Vec<Vec<(Elem, i64)>>,
}

struct Interner {
    pool: Vec<IntPoly>,
    ids: HashMap<IntPoly, u32>,
}

impl Interner {
    fn intern(&mut self, p: IntPoly) -> u32 {
        if let Some(&i) = self.ids.get(&p) {
            return i;
        }
        let i = self.pool.len() as u32;
        self.pool.push(p.clone());
        self.ids.insert(p, i);
        i
    }
}

/// All `P_{x,y}` by the standard recursion along a left descent `s` of `y`:
///
/// `P_{x,y} = q^{1-c} P_{sx,sy} + q^c P_{x,sy} − Σ_z μ(z,sy) q^{(l(y)-l(z))/2} P_{x,z}`
///
/// with `c = 1` if `sx < x`, the sum over `z < sy` with `sz < z`. When
/// `sx > x` we use `P_{x,y} = P_{sx,y}` instead.
pub fn compute_kl(g: &GroupTable) -> KLStore {
    let n = g.order();
    let mut interner = Interner {
        pool: Vec::new(),
        ids: HashMap::new(),
    };
    let one = interner.intern(IntPoly::constant(1));
    let mut index = vec![NONE; n * n];
    let mut mu: Vec<Vec<(Elem, i64)>> = vec![Vec::new(); n];
    index[0] = one;

    let q = IntPoly::monomial(1, 1);
    for y in 1..n {
        let yl = g.length(y as Elem);
        let s = g.first_left_descent(y as Elem).unwrap();
        let yp = g.left_mul(s, y as Elem) as usize;
        // Terms of the correction sum that can contribute.
        let corr: Vec<(Elem, i64, i32)> = mu[yp]
            .iter()
            .filter(|&&(z, _)| g.is_left_descent(s, z))
            .map(|&(z, m)| (z, m, ((yl - g.length(z)) / 2) as i32))
            .collect();
        for x in (0..=y).rev() {
            let xe = x as Elem;
            if g.length(xe) > yl {
                continue;
            }
            let sx = g.left_mul(s, xe) as usize;
            let below = if sx < x { sx } else { x };
            if index[yp * n + below] == NONE {
                continue;
            }
            if sx > x {
                index[y * n + x] = index[y * n + sx];
                continue;
            }
            let p_sx = &interner.pool[index[yp * n + sx] as usize];
            let mut p = p_sx.clone();
            if let Some(&i) = index.get(yp * n + x).filter(|&&i| i != NONE) {
                p = &p + &(&interner.pool[i as usize] * &q);
            }
            for &(z, m, e) in &corr {
                let i = index[z as usize * n + x];
                if i != NONE {
                    let t = interner.pool[i as usize].scale(&m).shift(e);
                    p = &p - &t;
                }
            }
            index[y * n + x] = interner.intern(p);
        }
        let mut row = Vec::new();
        for x in 0..y {
            let d = yl as i64 - g.length(x as Elem) as i64;
            let i = index[y * n + x];
            if i == NONE || d % 2 == 0 {
                continue;
            }
            if let Some(&c) = interner.pool[i as usize].coeff(((d - 1) / 2) as i32) {
                if c != 0 {
                    row.push((x as Elem, c));
                }
            }
        }
        mu[y] = row;
    }
    KLStore {
        n,
        fingerprint: g.fingerprint(),
        pool: interner.pool,
        index,
        mu,
    }
}

impl KLStore {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    /// `P_{x,y}` in `q`, or `None` when `x ≰ y`.
    pub fn p(&self, x: Elem, y: Elem) -> Option<&IntPoly> {
        match self.index[y as usize * self.n + x as usize] {
            NONE => None,
            i => Some(&self.pool[i as usize]),
        }
    }

    /// Bruhat order read off the store.
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.index[y as usize * self.n + x as usize] != NONE
    }

    pub fn mu(&self, x: Elem, y: Elem) -> i64 {
        match self.mu[y as usize].binary_search_by_key(&x, |&(z, _)| z) {
            Ok(i) => self.mu[y as usize][i].1,
            Err(_) => 0,
        }
    }

    /// `(x, μ(x,y))` for `x < y` with nonzero `μ`.
    pub fn mu_list(&self, y: Elem) -> &[(Elem, i64)] {
        &self.mu[y as usize]
    }

    /// Number of distinct polynomials.
    pub fn distinct_polynomials(&self) -> usize {
        self.pool.len()
    }
}
