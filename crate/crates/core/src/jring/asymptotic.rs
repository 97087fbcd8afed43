use std::collections::BTreeMap;

use crate::coxeter::{Elem, GroupTable};
use crate::error::{Error, Result};
use crate::exactnum::Coeff;
use crate::klbase::{HScope, HTable};
use crate::par::{self, Parallelism};

use super::cells::CellPartition;

fn need_all_pairs(h: &HTable, what: &str) -> Result<()> {
    if h.scope() != HScope::AllPairs {
        return Err(Error::usage(format!("{what} needs the all-pairs h-table")));
    }
    Ok(())
}

/// `a(z)`: the largest power of `v` in any `h_{x,y,z}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AFunction {
    pub a: Vec<u32>,
}

impl AFunction {
    pub fn get(&self, z: Elem) -> u32 {
        self.a[z as usize]
    }
}

/// Brute-force maximum over the all-pairs table, scanned in parallel over
/// `y` and reduced by elementwise max. Checks constancy on two-sided cells.
pub fn compute_a(g: &GroupTable, h: &HTable, cells: &CellPartition, par: Parallelism) -> Result<AFunction> {
    need_all_pairs(h, "the a-function")?;
    let n = g.order();
    let partial: Vec<Vec<i32>> = par::map_range(n, par, |y| {
        let mut best = vec![i32::MIN; n];
        for x in g.elements() {
            for (z, p) in h.row(x, y as Elem) {
                let d = p.degree().unwrap();
                if d > best[z as usize] {
                    best[z as usize] = d;
                }
            }
        }
        best
    });
    let mut best = vec![i32::MIN; n];
    for col in partial {
        for (b, c) in best.iter_mut().zip(col) {
            *b = (*b).max(c);
        }
    }
    if let Some(z) = best.iter().position(|&d| d < 0) {
        return Err(Error::internal(format!(
            "a-function: element {} has no nonnegative h-degree",
            g.render_word(z as Elem)
        )));
    }
    let a: Vec<u32> = best.into_iter().map(|d| d as u32).collect();
    for cell in &cells.two_sided_cells {
        let a0 = a[cell[0] as usize];
        if let Some(&z) = cell.iter().find(|&&z| a[z as usize] != a0) {
            return Err(Error::internal(format!(
                "a-function not constant on the two-sided cell of {}: a = {a0} vs a({}) = {}",
                g.render_word(cell[0]),
                g.render_word(z),
                a[z as usize]
            )));
        }
    }
    Ok(AFunction { a })
}

/// γ-constants, as the structure constants of `J`:
/// `t_x t_y = Σ_z γ_{x,y,z⁻¹} t_z` where `γ_{x,y,z⁻¹}` is the coefficient of
/// `v^{a(z)}` in `h_{x,y,z}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaTable {
    n: usize,
    inverse: Vec<Elem>,
    /// `(x, y) → [(z, γ_{x,y,z⁻¹})]`, ascending in `z`; zero lists omitted.
    products: BTreeMap<(Elem, Elem), Vec<(Elem, i64)>>,
}

pub fn compute_gamma(g: &GroupTable, h: &HTable, a: &AFunction) -> Result<GammaTable> {
    need_all_pairs(h, "γ")?;
    let mut products = BTreeMap::new();
    for x in g.elements() {
        for y in g.elements() {
            let list: Vec<(Elem, i64)> = h
                .row(x, y)
                .filter_map(|(z, p)| {
                    let c = p.coeff(a.get(z) as i32).copied().unwrap_or(0);
                    (c != 0).then_some((z, c))
                })
                .collect();
            if let Some(&(z, c)) = list.iter().find(|&&(_, c)| c < 0) {
                return Err(Error::internal(format!(
                    "negative γ = {c} at ({}, {}, {})",
                    g.render_word(x),
                    g.render_word(y),
                    g.render_word(g.inverse(z))
                )));
            }
            if !list.is_empty() {
                products.insert((x, y), list);
            }
        }
    }
    Ok(GammaTable {
        n: g.order(),
        inverse: g.elements().map(|w| g.inverse(w)).collect(),
        products,
    })
}

impl GammaTable {
    /// `γ_{x,y,z}`.
    pub fn gamma(&self, x: Elem, y: Elem, z: Elem) -> i64 {
        let target = self.inverse[z as usize];
        self.products
            .get(&(x, y))
            .and_then(|l| l.binary_search_by_key(&target, |&(w, _)| w).ok().map(|i| l[i].1))
            .unwrap_or(0)
    }

    /// `t_x · t_y` as `[(z, coefficient of t_z)]`.
    pub fn j_multiply(&self, x: Elem, y: Elem) -> &[(Elem, i64)] {
        self.products.get(&(x, y)).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Nonzero `(x, y, z, γ_{x,y,z})`, ordered by `(x, y)`.
    pub fn entries(&self) -> impl Iterator<Item = (Elem, Elem, Elem, i64)> + '_ {
        self.products
            .iter()
            .flat_map(move |(&(x, y), l)| l.iter().map(move |&(z, c)| (x, y, self.inverse[z as usize], c)))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Bilinear extension of `j_multiply` to sparse vectors.
    pub fn product<T: Coeff>(&self, a: &[(Elem, T)], b: &[(Elem, T)]) -> Vec<(Elem, T)> {
        let mut acc: BTreeMap<Elem, T> = BTreeMap::new();
        for (x, ca) in a {
            for (y, cb) in b {
                let ab = ca.mul_ref(cb);
                for &(z, c) in self.j_multiply(*x, *y) {
                    let term = ab.mul_ref(&ab.from_i64_like(c));
                    match acc.get_mut(&z) {
                        Some(slot) => slot.add_assign_ref(&term),
                        None => {
                            acc.insert(z, term);
                        }
                    }
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

/// Distinguished involutions: in each left cell `Γ`, the unique `d ∈ Γ`
/// with `γ_{x⁻¹,x,d} ≠ 0` for every `x ∈ Γ`.
///
/// Checked: exactly one such `d` per left cell, it is an involution,
/// `γ_{x⁻¹,x,d} = 1`, and `Σ_{d∈𝒟} t_d` is a two-sided unit of `J`.
pub fn distinguished_involutions(g: &GroupTable, cells: &CellPartition, gamma: &GammaTable) -> Result<Vec<Elem>> {
    let mut set = std::collections::BTreeSet::new();
    for cell in &cells.left_cells {
        let mut candidates: Option<std::collections::BTreeSet<Elem>> = None;
        for &x in cell {
            let hits: std::collections::BTreeSet<Elem> = gamma
                .j_multiply(g.inverse(x), x)
                .iter()
                .map(|&(z, _)| g.inverse(z))
                .filter(|&d| cells.same_left(d, x))
                .collect();
            candidates = Some(match candidates {
                None => hits,
                Some(c) => c.intersection(&hits).copied().collect(),
            });
        }
        let candidates = candidates.unwrap_or_default();
        if candidates.len() != 1 {
            return Err(Error::internal(format!(
                "left cell of {} has {} distinguished candidates",
                g.render_word(cell[0]),
                candidates.len()
            )));
        }
        let d = *candidates.iter().next().unwrap();
        for &x in cell {
            if gamma.gamma(g.inverse(x), x, d) != 1 {
                return Err(Error::internal(format!(
                    "γ(x⁻¹, x, d) ≠ 1 for x = {}, d = {}",
                    g.render_word(x),
                    g.render_word(d)
                )));
            }
        }
        set.insert(d);
    }
    let d: Vec<Elem> = set.into_iter().collect();
    for &e in &d {
        if g.inverse(e) != e {
            return Err(Error::internal(format!(
                "{} in 𝒟 is not an involution",
                g.render_word(e)
            )));
        }
    }
    let unit: Vec<(Elem, i64)> = d.iter().map(|&e| (e, 1)).collect();
    for x in g.elements() {
        let tx = [(x, 1i64)];
        if gamma.product(&unit, &tx) != tx || gamma.product(&tx, &unit) != tx {
            return Err(Error::internal(format!(
                "Σ t_d is not a unit on t_{}",
                g.render_word(x)
            )));
        }
    }
    Ok(d)
}
