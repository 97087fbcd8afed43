//! The involution `†` of the Hecke algebra and the T-basis expansions of
//! `c_x^†`.
//!
//! With `(T_s + 1)(T_s − v²) = 0` the map `T_s ↦ −T_s + v² − 1` (that is,
//! `−v² T_s⁻¹`) swaps the two eigenvalues and extends to an algebra
//! automorphism of order two. Then `c_s^† = v⁻¹(v² − T_s)`.

use crate::coxeter::{Elem, GroupTable};
use crate::exactnum::IntPoly;

use super::hecke::{t_left_gen, t_zero, TVec};
use super::kl::KLStore;

/// `T_s^† · a = (−T_s + v² − 1) · a`.
pub fn dagger_gen_left(g: &GroupTable, s: usize, a: &TVec) -> TVec {
    let ts = t_left_gen(g, s, a);
    let k = IntPoly::from_i64(0, &[-1, 0, 1]);
    a.iter().zip(&ts).map(|(x, y)| &(x * &k) - y).collect()
}

/// `†(a)` for an arbitrary T-basis vector.
pub fn apply_dagger(g: &GroupTable, a: &TVec) -> TVec {
    let mut out = t_zero(g);
    for (w, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut t = t_zero(g);
        t[0] = c.clone();
        for &s in g.word(w as Elem).iter().rev() {
            t = dagger_gen_left(g, s as usize, &t);
        }
        for (o, x) in out.iter_mut().zip(&t) {
            if !x.is_zero() {
                *o = &*o + x;
            }
        }
    }
    out
}

/// Sparse lower-triangular matrix `M` with `c_x^† = Σ_{y ≤ x} M_{x,y} T_y`.
#[derive(Clone, Debug)]
pub struct DaggerBasis {
    rows: Vec<Vec<(Elem, IntPoly)>>,
}

/// `c_x^†` for all `x`, by `c_x^† = c_s^† c_{x'}^† − Σ_{z<x', sz<z} μ(z,x') c_z^†`.
pub fn compute_dagger(g: &GroupTable, kl: &KLStore) -> DaggerBasis {
    let n = g.order();
    let mut rows: Vec<Vec<(Elem, IntPoly)>> = Vec::with_capacity(n);
    rows.push(vec![(0, IntPoly::constant(1))]);
    for x in 1..n as Elem {
        let s = g.first_left_descent(x).unwrap();
        let xp = g.left_mul(s, x);
        let mut prev = t_zero(g);
        for (y, c) in &rows[xp as usize] {
            prev[*y as usize] = c.clone();
        }
        // v⁻¹(v² − T_s)·prev
        let ts = t_left_gen(g, s, &prev);
        let mut cur: TVec = prev.iter().zip(&ts).map(|(a, b)| (&a.shift(2) - b).shift(-1)).collect();
        for &(z, m) in kl.mu_list(xp) {
            if g.is_left_descent(s, z) {
                for (y, c) in &rows[z as usize] {
                    let slot = &mut cur[*y as usize];
                    *slot = &*slot - &c.scale(&m);
                }
            }
        }
        rows.push(
            cur.into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(y, c)| (y as Elem, c))
                .collect(),
        );
    }
    DaggerBasis { rows }
}

impl DaggerBasis {
    /// `(y, M_{x,y})` with nonzero entries, ascending in `y`.
    pub fn row(&self, x: Elem) -> &[(Elem, IntPoly)] {
        &self.rows[x as usize]
    }

    pub fn dense_row(&self, g: &GroupTable, x: Elem) -> TVec {
        let mut t = t_zero(g);
        for (y, c) in self.row(x) {
            t[*y as usize] = c.clone();
        }
        t
    }

    /// `M` at `v = 1`: `c_x^†|_{v=1} = Σ_y D_{x,y} y` in `C[W]`.
    pub fn at_one(&self, x: Elem) -> Vec<(Elem, i64)> {
        self.row(x)
            .iter()
            .filter_map(|(y, c)| {
                let e = c.eval_at_one().unwrap_or(0);
                (e != 0).then_some((*y, e))
            })
            .collect()
    }
}

/// Single-element convenience wrapper: `c_x^†` in the T-basis.
pub fn dagger_t_basis(g: &GroupTable, kl: &KLStore, x: Elem) -> TVec {
    compute_dagger(g, kl).dense_row(g, x)
}
