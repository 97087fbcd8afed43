//! Literal coinvariant algebra of `A2` acting on `Q[x, y]` through the
//! matrices `s1 = [[-1, 1], [0, 1]]`, `s2 = [[1, 0], [1, -1]]`: the graded
//! trace of every `w`, and from it `P_E` by inner products with the
//! trivial, sign and reflection characters.

use std::collections::BTreeMap;

use num_rational::Rational64;

type M2 = [[i64; 2]; 2];
type Poly = BTreeMap<(u32, u32), Rational64>;

fn mul(a: &M2, b: &M2) -> M2 {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

pub fn group() -> Vec<M2> {
    let gens = [[[-1, 1], [0, 1]], [[1, 0], [1, -1]]];
    let mut els = vec![[[1, 0], [0, 1]]];
    let mut i = 0;
    while i < els.len() {
        for s in &gens {
            let n = mul(&els[i], s);
            if !els.contains(&n) {
                els.push(n);
            }
        }
        i += 1;
    }
    els
}

fn pmul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&(i, j), &c) in a {
        for (&(k, l), &d) in b {
            *out.entry((i + k, j + l)).or_default() += c * d;
        }
    }
    out.retain(|_, c| *c != Rational64::from(0));
    out
}

fn pow(p: &Poly, e: u32) -> Poly {
    (0..e).fold(Poly::from([((0, 0), Rational64::from(1))]), |acc, _| pmul(&acc, p))
}

/// `f(x, y) ↦ f(m00 x + m01 y, m10 x + m11 y)`.
fn act(m: &M2, f: &Poly) -> Poly {
    let x = Poly::from([((1, 0), m[0][0].into()), ((0, 1), m[0][1].into())]);
    let y = Poly::from([((1, 0), m[1][0].into()), ((0, 1), m[1][1].into())]);
    let mut out = Poly::new();
    for (&(i, j), &c) in f {
        for (k, v) in pmul(&pow(&x, i), &pow(&y, j)) {
            *out.entry(k).or_default() += c * v;
        }
    }
    out.retain(|_, c| *c != Rational64::from(0));
    out
}

fn to_vec(f: &Poly, d: u32) -> Vec<Rational64> {
    (0..=d)
        .map(|i| f.get(&(i, d - i)).copied().unwrap_or_default())
        .collect()
}

fn monomial(i: u32, j: u32) -> Poly {
    Poly::from([((i, j), Rational64::from(1))])
}

/// Row-reduced basis of the span.
fn basis(mut rows: Vec<Vec<Rational64>>) -> Vec<Vec<Rational64>> {
    let n = rows.first().map_or(0, |r| r.len());
    let mut out: Vec<Vec<Rational64>> = Vec::new();
    for col in 0..n {
        let Some(p) = rows.iter().position(|r| r[col] != 0.into()) else {
            continue;
        };
        let pivot = rows.remove(p);
        let pivot: Vec<Rational64> = pivot.iter().map(|x| x / pivot[col]).collect();
        for r in rows.iter_mut().chain(out.iter_mut()) {
            let k = r[col];
            for (a, b) in r.iter_mut().zip(&pivot) {
                *a -= k * b;
            }
        }
        out.push(pivot);
    }
    out
}

/// Coordinates of `v` in a reduced basis (pivot = first nonzero entry).
fn coords(b: &[Vec<Rational64>], v: &[Rational64]) -> Vec<Rational64> {
    b.iter()
        .map(|r| {
            let p = r.iter().position(|x| *x != 0.into()).unwrap();
            v[p]
        })
        .collect()
}

/// `Σ_i tr(w | (S/I)_i) X^i`, up to degree 4.
pub fn graded_trace(ws: &[M2], w: &M2) -> Vec<Rational64> {
    let reynolds = |f: &Poly| {
        let mut out = Poly::new();
        for g in ws {
            for (k, v) in act(g, f) {
                *out.entry(k).or_default() += v / Rational64::from(ws.len() as i64);
            }
        }
        out.retain(|_, c| *c != Rational64::from(0));
        out
    };
    let mut invariants: Vec<(u32, Poly)> = Vec::new();
    for d in 1..=4u32 {
        for i in 0..=d {
            let f = reynolds(&monomial(i, d - i));
            if !f.is_empty() {
                invariants.push((d, f));
            }
        }
    }
    (0..=4u32)
        .map(|d| {
            let mut ideal = Vec::new();
            for (e, f) in &invariants {
                if *e <= d {
                    for i in 0..=(d - e) {
                        ideal.push(to_vec(&pmul(f, &monomial(i, d - e - i)), d));
                    }
                }
            }
            let ib = basis(ideal);
            let full: Rational64 = (0..=d)
                .map(|i| to_vec(&act(w, &monomial(i, d - i)), d)[i as usize])
                .sum();
            let sub: Rational64 = ib
                .iter()
                .enumerate()
                .map(|(k, v)| {
                    let f: Poly = (0..=d)
                        .filter(|&i| v[i as usize] != 0.into())
                        .map(|i| ((i, d - i), v[i as usize]))
                        .collect();
                    coords(&ib, &to_vec(&act(w, &f), d))[k]
                })
                .sum();
            full - sub
        })
        .collect()
}

pub fn fake_degrees() -> [Vec<Rational64>; 3] {
    let ws = group();
    let chars: [fn(&M2) -> i64; 3] = [|_| 1, |m| m[0][0] * m[1][1] - m[0][1] * m[1][0], |m| m[0][0] + m[1][1]];
    chars.map(|chi| {
        let mut p = vec![Rational64::from(0); 5];
        for w in &ws {
            for (i, t) in graded_trace(&ws, w).into_iter().enumerate() {
                p[i] += t * Rational64::from(chi(w)) / Rational64::from(ws.len() as i64);
            }
        }
        p
    })
}
