//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls into `klbase`, `jring`, `chartab` or `classify`; the
//! only library pieces used are the enumerated group (tested on its own)
//! and the exact number types.

#![allow(dead_code)]

pub mod coinvariant;

use std::collections::{BTreeMap, BTreeSet};

use klcells::coxeter::{build_group, CoxeterDatum, Elem, GroupTable, DEFAULT_MAX_ORDER};
use klcells::exactnum::IntPoly;

pub fn group(sym: &str) -> GroupTable {
    build_group(&CoxeterDatum::new(sym.parse().unwrap()), DEFAULT_MAX_ORDER).unwrap()
}

/// Laurent polynomial as exponent → coefficient.
pub type Lp = BTreeMap<i32, i64>;

pub fn lp_add(a: &mut Lp, b: &Lp, scale: i64, shift: i32) {
    for (&e, &c) in b {
        let slot = a.entry(e + shift).or_insert(0);
        *slot += c * scale;
        if *slot == 0 {
            a.remove(&(e + shift));
        }
    }
}

pub fn lp_mul(a: &Lp, b: &Lp) -> Lp {
    let mut out = Lp::new();
    for (&e, &c) in a {
        lp_add(&mut out, b, c, e);
    }
    out
}

pub fn lp_from(p: &IntPoly) -> Lp {
    p.terms().map(|(e, &c)| (e, c)).collect()
}

pub fn lp_const(c: i64) -> Lp {
    let mut m = Lp::new();
    if c != 0 {
        m.insert(0, c);
    }
    m
}

/// Bruhat order by subword enumeration: the set of all products of
/// subwords of the canonical word of `y`.
pub fn subword_set(g: &GroupTable, y: Elem) -> BTreeSet<Elem> {
    let mut reach = BTreeSet::from([0]);
    for &s in g.word(y) {
        let next: Vec<Elem> = reach.iter().map(|&r| g.right_mul(r, s as usize)).collect();
        reach.extend(next);
    }
    reach
}

/// KL polynomials from R-polynomials and the defining identity
/// `q^{l(w)-l(x)} P_{x,w}(q⁻¹) − P_{x,w}(q) = Σ_{x<y≤w} R_{x,y} P_{y,w}`.
/// Entry `[w][x]` is the coefficient list in `q`, `None` unless `x ≤ w`.
pub fn oracle_kl(g: &GroupTable) -> Vec<Vec<Option<Vec<i64>>>> {
    let n = g.order();
    let below: Vec<BTreeSet<Elem>> = (0..n as Elem).map(|y| subword_set(g, y)).collect();
    let leq = |x: Elem, y: Elem| below[y as usize].contains(&x);

    // R_{x,w}, polynomials in q as coefficient vectors.
    let mut r: Vec<Vec<Option<Vec<i64>>>> = vec![vec![None; n]; n];
    for w in 0..n as Elem {
        r[w as usize][w as usize] = Some(vec![1]);
        if w == 0 {
            continue;
        }
        let s = (0..g.rank())
            .rev()
            .find(|&s| g.length(g.left_mul(s, w)) < g.length(w))
            .unwrap();
        let sw = g.left_mul(s, w);
        for x in 0..n as Elem {
            if x == w || !leq(x, w) {
                continue;
            }
            let sx = g.left_mul(s, x);
            let get = |a: Elem, b: Elem, r: &Vec<Vec<Option<Vec<i64>>>>| {
                r[b as usize][a as usize].clone().unwrap_or_default()
            };
            let val = if g.length(sx) < g.length(x) {
                get(sx, sw, &r)
            } else {
                let a = get(x, sw, &r);
                let b = get(sx, sw, &r);
                let mut out = vec![0i64; a.len().max(b.len()) + 1];
                for (i, &c) in a.iter().enumerate() {
                    out[i + 1] += c;
                    out[i] -= c;
                }
                for (i, &c) in b.iter().enumerate() {
                    out[i + 1] += c;
                }
                while out.last() == Some(&0) {
                    out.pop();
                }
                out
            };
            r[w as usize][x as usize] = Some(val);
        }
    }

    let mut p: Vec<Vec<Option<Vec<i64>>>> = vec![vec![None; n]; n];
    for w in 0..n as Elem {
        let mut xs: Vec<Elem> = below[w as usize].iter().copied().collect();
        xs.sort_by_key(|&x| std::cmp::Reverse(g.length(x)));
        for x in xs {
            if x == w {
                p[w as usize][x as usize] = Some(vec![1]);
                continue;
            }
            let d = (g.length(w) - g.length(x)) as usize;
            let mut rhs = vec![0i64; d + 1];
            for &y in &below[w as usize] {
                if y == x || !leq(x, y) {
                    continue;
                }
                let rxy = r[y as usize][x as usize].as_ref().unwrap();
                let pyw = p[w as usize][y as usize].as_ref().unwrap();
                for (i, &a) in rxy.iter().enumerate() {
                    for (j, &b) in pyw.iter().enumerate() {
                        rhs[i + j] += a * b;
                    }
                }
            }
            let mut pol: Vec<i64> = rhs[..=(d - 1) / 2].iter().map(|c| -c).collect();
            while pol.last() == Some(&0) {
                pol.pop();
            }
            p[w as usize][x as usize] = Some(pol);
        }
    }
    p
}

/// Naive Hecke algebra in the T-basis over oracle KL polynomials.
pub struct NaiveHecke<'a> {
    pub g: &'a GroupTable,
    pub p: Vec<Vec<Option<Vec<i64>>>>,
}

pub type NaiveT = Vec<Lp>;

impl<'a> NaiveHecke<'a> {
    pub fn new(g: &'a GroupTable) -> Self {
        NaiveHecke { g, p: oracle_kl(g) }
    }

    fn zero(&self) -> NaiveT {
        vec![Lp::new(); self.g.order()]
    }

    /// `T_s · a` with `T_s² = (v² − 1) T_s + v²`.
    pub fn ts_left(&self, s: usize, a: &NaiveT) -> NaiveT {
        let mut out = self.zero();
        for (w, c) in a.iter().enumerate() {
            if c.is_empty() {
                continue;
            }
            let sw = self.g.left_mul(s, w as Elem) as usize;
            if self.g.length(sw as Elem) > self.g.length(w as Elem) {
                lp_add(&mut out[sw], c, 1, 0);
            } else {
                lp_add(&mut out[w], c, 1, 2);
                lp_add(&mut out[w], c, -1, 0);
                lp_add(&mut out[sw], c, 1, 2);
            }
        }
        out
    }

    pub fn mul(&self, a: &NaiveT, b: &NaiveT) -> NaiveT {
        let mut out = self.zero();
        for (x, c) in a.iter().enumerate() {
            if c.is_empty() {
                continue;
            }
            let mut t = b.clone();
            for &s in self.g.word(x as Elem).iter().rev() {
                t = self.ts_left(s as usize, &t);
            }
            for (o, tv) in out.iter_mut().zip(&t) {
                let prod = lp_mul(tv, c);
                lp_add(o, &prod, 1, 0);
            }
        }
        out
    }

    pub fn c(&self, w: Elem) -> NaiveT {
        let mut t = self.zero();
        let lw = self.g.length(w) as i32;
        for y in 0..self.g.order() {
            if let Some(pol) = &self.p[w as usize][y] {
                for (i, &c) in pol.iter().enumerate() {
                    if c != 0 {
                        t[y].insert(2 * i as i32 - lw, c);
                    }
                }
            }
        }
        t
    }

    /// Back to the C′-basis: `z → coefficient`.
    pub fn to_c(&self, a: &NaiveT) -> BTreeMap<Elem, Lp> {
        let mut rest = a.clone();
        let mut out = BTreeMap::new();
        let mut order: Vec<usize> = (0..self.g.order()).collect();
        order.sort_by_key(|&w| std::cmp::Reverse(self.g.length(w as Elem)));
        for w in order {
            if rest[w].is_empty() {
                continue;
            }
            let lw = self.g.length(w as Elem) as i32;
            let mut coeff = Lp::new();
            lp_add(&mut coeff, &rest[w], 1, lw);
            let cw = self.c(w as Elem);
            for (y, cy) in cw.iter().enumerate() {
                let prod = lp_mul(cy, &coeff);
                lp_add(&mut rest[y], &prod, -1, 0);
            }
            out.insert(w as Elem, coeff);
        }
        out
    }

    pub fn c_product(&self, x: Elem, y: Elem) -> BTreeMap<Elem, Lp> {
        self.to_c(&self.mul(&self.c(x), &self.c(y)))
    }
}

/// Robinson–Schensted insertion tableau and recording tableau.
pub fn robinson_schensted(perm: &[usize]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &v) in perm.iter().enumerate() {
        let mut x = v;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![step]);
                break;
            }
            match p[row].iter().position(|&y| y > x) {
                Some(i) => {
                    std::mem::swap(&mut p[row][i], &mut x);
                    row += 1;
                }
                None => {
                    p[row].push(x);
                    q[row].push(step);
                    break;
                }
            }
        }
    }
    (p, q)
}

/// One-line notation of a type-A element, `s_i` acting as the transposition
/// of positions `i, i+1`.
pub fn permutation(g: &GroupTable, w: Elem) -> Vec<usize> {
    let n = g.rank() + 1;
    let mut perm: Vec<usize> = (0..n).collect();
    for &s in g.word(w) {
        perm.swap(s as usize, s as usize + 1);
    }
    perm
}
