//! Dense T-basis arithmetic in the Hecke algebra with
//! `(T_s + 1)(T_s − v²) = 0`, and the C′-basis conversions.

use crate::coxeter::{Elem, GroupTable};
use crate::exactnum::IntPoly;

use super::kl::KLStore;

/// `Σ_w a_w T_w` with `a_w ∈ Z[v, v⁻¹]`, indexed by element.
pub type TVec = Vec<IntPoly>;

/// Sparse `Σ_z h_z c_z`, ascending in `z`.
pub type CVec = Vec<(Elem, IntPoly)>;

fn v2_minus_1() -> IntPoly {
    IntPoly::from_i64(0, &[-1, 0, 1])
}

pub fn t_zero(g: &GroupTable) -> TVec {
    vec![IntPoly::zero(); g.order()]
}

pub fn t_basis(g: &GroupTable, w: Elem) -> TVec {
    let mut t = t_zero(g);
    t[w as usize] = IntPoly::constant(1);
    t
}

/// `T_s · a`.
pub fn t_left_gen(g: &GroupTable, s: usize, a: &TVec) -> TVec {
    let mut out = t_zero(g);
    let k = v2_minus_1();
    for (w, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sw = g.left_mul(s, w as Elem) as usize;
        if sw > w {
            out[sw] = &out[sw] + c;
        } else {
            out[w] = &out[w] + &(c * &k);
            out[sw] = &out[sw] + &c.shift(2);
        }
    }
    out
}

/// `T_x · a`.
pub fn t_left_elem(g: &GroupTable, x: Elem, a: &TVec) -> TVec {
    g.word(x)
        .iter()
        .rev()
        .fold(a.clone(), |acc, &s| t_left_gen(g, s as usize, &acc))
}

pub fn t_product(g: &GroupTable, a: &TVec, b: &TVec) -> TVec {
    let mut out = t_zero(g);
    for (x, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let tb = t_left_elem(g, x as Elem, b);
        for (o, t) in out.iter_mut().zip(&tb) {
            if !t.is_zero() {
                *o = &*o + &(t * c);
            }
        }
    }
    out
}

/// `c_w = v^{-l(w)} Σ_{y ≤ w} P_{y,w}(v²) T_y`.
pub fn c_in_t(g: &GroupTable, kl: &KLStore, w: Elem) -> TVec {
    let lw = g.length(w) as i32;
    (0..g.order() as Elem)
        .map(|y| match kl.p(y, w) {
            Some(p) => p.substitute_square().shift(-lw),
            None => IntPoly::zero(),
        })
        .collect()
}

/// Rewrite a T-basis vector in the C′-basis by unitriangular elimination,
/// largest element first.
pub fn t_to_c(g: &GroupTable, kl: &KLStore, a: &TVec) -> CVec {
    let mut rest = a.clone();
    let mut out = Vec::new();
    for w in (0..g.order()).rev() {
        if rest[w].is_zero() {
            continue;
        }
        let lw = g.length(w as Elem) as i32;
        let coeff = rest[w].shift(lw);
        for y in 0..=w {
            if let Some(p) = kl.p(y as Elem, w as Elem) {
                let term = &p.substitute_square().shift(-lw) * &coeff;
                rest[y] = &rest[y] - &term;
            }
        }
        out.push((w as Elem, coeff));
    }
    out.reverse();
    out
}

/// `c_x · c_y` in the C′-basis, through the T-basis.
pub fn c_product(g: &GroupTable, kl: &KLStore, x: Elem, y: Elem) -> CVec {
    let t = t_product(g, &c_in_t(g, kl, x), &c_in_t(g, kl, y));
    t_to_c(g, kl, &t)
}
