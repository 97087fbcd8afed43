use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::coxeter::{Elem, GroupTable};
use crate::error::{Error, Result};
use crate::exactnum::IntPoly;
use crate::par::{self, Parallelism};

use super::hecke::CVec;
use super::kl::KLStore;

const NONE: u32 = u32::MAX;

/// Which left factors `x` get rows `c_x·c_y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HScope {
    /// `x ∈ S`: enough for the cell preorders.
    Generators,
    /// Every `x`: needed for `a`, `γ`, `φ`.
    AllPairs,
}

impl HScope {
    pub fn name(self) -> &'static str {
        match self {
            HScope::Generators => "generators-only",
            HScope::AllPairs => "all-pairs",
        }
    }
}

/// Default ceiling on stored `(x, y, z)` entries.
pub const DEFAULT_H_BUDGET: usize = 200_000_000;

/// Structure constants `h_{x,y,z}` of the C′-basis, stored row by row.
///
/// Row `(x, y)` lists `(z, h_{x,y,z})` with nonzero entries, ascending in
/// `z`. Polynomials are interned.
#[derive(Clone, Debug, PartialEq)]
pub struct HTable {
    pub(crate) scope: HScope,
    pub(crate) n: usize,
    pub(crate) lefts: Vec<Elem>,
    pub(crate) left_pos: Vec<u32>,
    pub(crate) rows: Vec<Vec<(Elem, u32)>>,
    pub(crate) pool: Vec<IntPoly>,
}

/// Sparse accumulator over a dense scratch vector.
struct Acc {
    slots: Vec<IntPoly>,
    touched: Vec<Elem>,
}

impl Acc {
    fn new(n: usize) -> Self {
        Acc {
            slots: vec![IntPoly::zero(); n],
            touched: Vec::new(),
        }
    }

    fn add(&mut self, z: Elem, p: &IntPoly) {
        let slot = &mut self.slots[z as usize];
        if slot.is_zero() {
            self.touched.push(z);
        }
        *slot = &*slot + p;
    }

    fn take(&mut self) -> CVec {
        self.touched.sort_unstable();
        self.touched.dedup();
        let mut out = Vec::with_capacity(self.touched.len());
        for &z in &self.touched {
            let p = std::mem::replace(&mut self.slots[z as usize], IntPoly::zero());
            if !p.is_zero() {
                out.push((z, p));
            }
        }
        self.touched.clear();
        out
    }
}

/// `c_s · Σ a_w c_w`, using
/// `c_s c_w = (v+v⁻¹) c_w` if `sw < w`, else `c_{sw} + Σ_{z<w, sz<z} μ(z,w) c_z`.
fn apply_cs(g: &GroupTable, kl: &KLStore, s: usize, a: &CVec, acc: &mut Acc) {
    let vv = IntPoly::v_plus_v_inv();
    for (w, c) in a {
        let sw = g.left_mul(s, *w);
        if sw < *w {
            acc.add(*w, &(c * &vv));
        } else {
            acc.add(sw, c);
            for &(z, m) in kl.mu_list(*w) {
                if g.is_left_descent(s, z) {
                    acc.add(z, &c.scale(&m));
                }
            }
        }
    }
}

/// `c_s · c_y` for one generator.
pub fn generator_row(g: &GroupTable, kl: &KLStore, s: usize, y: Elem) -> CVec {
    let mut acc = Acc::new(g.order());
    apply_cs(g, kl, s, &vec![(y, IntPoly::constant(1))], &mut acc);
    acc.take()
}

/// Every row `c_x · c_y` for fixed `y`, indexed by `x`.
///
/// Recursion on the canonical word of `x = s·x'`:
/// `c_x = c_s c_{x'} − Σ_{z<x', sz<z} μ(z,x') c_z`.
pub fn h_column(g: &GroupTable, kl: &KLStore, y: Elem) -> Vec<CVec> {
    let n = g.order();
    let mut acc = Acc::new(n);
    let mut rows: Vec<CVec> = Vec::with_capacity(n);
    rows.push(vec![(y, IntPoly::constant(1))]);
    for x in 1..n as Elem {
        let s = g.first_left_descent(x).unwrap();
        let xp = g.left_mul(s, x);
        apply_cs(g, kl, s, &rows[xp as usize], &mut acc);
        for &(z, m) in kl.mu_list(xp) {
            if g.is_left_descent(s, z) {
                for (w, c) in &rows[z as usize] {
                    acc.add(*w, &c.scale(&-m));
                }
            }
        }
        rows.push(acc.take());
    }
    rows
}

/// Every row `c_x c_y` is nonzero, so an all-pairs table stores at least
/// `|W|²` entries; refuse up front when that alone exceeds `budget`.
pub fn check_h_budget(g: &GroupTable, scope: HScope, budget: usize) -> Result<()> {
    let n = g.order();
    let rows = match scope {
        HScope::Generators => n * g.rank(),
        HScope::AllPairs => n.saturating_mul(n),
    };
    if rows > budget {
        return Err(Error::Refused(format!(
            "{} h-table for {} needs at least {rows} entries, above the memory budget of {budget}",
            scope.name(),
            g.name()
        )));
    }
    Ok(())
}

/// Fill the requested rows. Columns (fixed `y`) are independent; they run
/// in parallel in blocks and are merged in `y` order. Refuses when the
/// number of stored entries would exceed `budget`.
pub fn compute_h_table(g: &GroupTable, kl: &KLStore, scope: HScope, par: Parallelism, budget: usize) -> Result<HTable> {
    check_h_budget(g, scope, budget)?;
    let n = g.order();
    let lefts: Vec<Elem> = match scope {
        HScope::Generators => {
            let mut v: Vec<Elem> = (0..g.rank()).map(|s| g.generator(s)).collect();
            v.sort_unstable();
            v
        }
        HScope::AllPairs => (0..n as Elem).collect(),
    };
    let mut left_pos = vec![NONE; n];
    for (i, &x) in lefts.iter().enumerate() {
        left_pos[x as usize] = i as u32;
    }
    let gens_sorted: Vec<usize> = lefts.iter().map(|&x| g.first_left_descent(x).unwrap_or(0)).collect();

    let mut table = HTable {
        scope,
        n,
        lefts,
        left_pos,
        rows: Vec::new(),
        pool: Vec::new(),
    };
    let mut ids: HashMap<IntPoly, u32> = HashMap::new();
    let mut stored = 0usize;
    let block = 64.max(n / 16);
    let mut start = 0;
    while start < n {
        let end = (start + block).min(n);
        let cols: Vec<Vec<CVec>> = par::map_range(end - start, par, |i| {
            let y = (start + i) as Elem;
            match scope {
                HScope::Generators => gens_sorted.iter().map(|&s| generator_row(g, kl, s, y)).collect(),
                HScope::AllPairs => h_column(g, kl, y),
            }
        });
        for col in cols {
            for row in col {
                stored += row.len();
                if stored > budget {
                    return Err(Error::Refused(format!(
                        "{} h-table for {} exceeds the memory budget of {budget} entries",
                        scope.name(),
                        g.name()
                    )));
                }
                let packed = row
                    .into_iter()
                    .map(|(z, p)| {
                        let id = match ids.get(&p) {
                            Some(&id) => id,
                            None => {
                                let id = table.pool.len() as u32;
                                table.pool.push(p.clone());
                                ids.insert(p, id);
                                id
                            }
                        };
                        (z, id)
                    })
                    .collect();
                table.rows.push(packed);
            }
        }
        start = end;
    }
    Ok(table)
}

impl HTable {
    pub fn scope(&self) -> HScope {
        self.scope
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Left factors with stored rows, ascending.
    pub fn lefts(&self) -> &[Elem] {
        &self.lefts
    }

    pub fn has_row(&self, x: Elem) -> bool {
        self.left_pos[x as usize] != NONE
    }

    /// Row `(x, y)`; panics if `x` is outside the scope.
    pub fn row(&self, x: Elem, y: Elem) -> impl Iterator<Item = (Elem, &IntPoly)> + '_ {
        let i = self.left_pos[x as usize];
        assert!(
            i != NONE,
            "h-table row for x={x} is outside the {} scope",
            self.scope.name()
        );
        let r = &self.rows[y as usize * self.lefts.len() + i as usize];
        r.iter().map(|&(z, id)| (z, &self.pool[id as usize]))
    }

    /// `h_{x,y,z}`, `None` when zero.
    pub fn h(&self, x: Elem, y: Elem, z: Elem) -> Option<&IntPoly> {
        let i = self.left_pos[x as usize];
        assert!(
            i != NONE,
            "h-table row for x={x} is outside the {} scope",
            self.scope.name()
        );
        let r = &self.rows[y as usize * self.lefts.len() + i as usize];
        r.binary_search_by_key(&z, |&(w, _)| w)
            .ok()
            .map(|k| &self.pool[r[k].1 as usize])
    }

    pub fn entry_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn distinct_polynomials(&self) -> usize {
        self.pool.len()
    }
}
