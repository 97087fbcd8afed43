use serde::Serialize;

use crate::coxeter::{CoxeterType, Elem, GroupTable};
use crate::error::{Error, Result};
use crate::exactnum::{Coeff, CycloInt, IntPoly};
use crate::jring::{AFunction, CellPartition};
use crate::par::{self, Parallelism};

use super::cellmod::{detect_orientation, left_cell_module, Orientation};
use super::fake::{fake_degree, reflection_charpolys};
use super::hecke::{hecke_character, is_ordinary, CycloPoly};
use super::pipeline::Artifacts;

#[derive(Clone, Debug)]
pub struct IrrepRecord {
    pub index: usize,
    pub label: String,
    pub dim: u64,
    /// The two-sided cell carrying the nonzero `tr(t_z, E_∞)`.
    pub cell: usize,
    pub j_traces: Vec<CycloInt>,
    pub hecke: Vec<CycloPoly>,
    pub a: u32,
    pub fake_degree: IntPoly,
    pub b: u32,
    pub ordinary: bool,
    pub palindromic: bool,
    pub special: bool,
    /// Row of `E ⊗ sgn`.
    pub sign_twist: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvolutionRecord {
    pub element: Elem,
    pub word: String,
    pub length: u32,
    pub a: u32,
    pub ordinary: bool,
    pub two_sided_cell: u32,
    pub left_cell: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellRecord {
    pub id: usize,
    pub a: u32,
    pub size: usize,
    pub left_cells: Vec<usize>,
    /// Rows of `Irr^c W`.
    pub irreps: Vec<usize>,
    pub exceptional: bool,
    pub special: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub irreps: Vec<IrrepRecord>,
    pub involutions: Vec<InvolutionRecord>,
    pub cells: Vec<CellRecord>,
    pub orientation: Orientation,
    /// Per left cell: multiplicities of `[Γ]` by row.
    pub left_modules: Vec<Vec<u64>>,
    pub expected_profile: Option<(usize, u64)>,
    pub checks: Vec<CheckRecord>,
}

/// `(2^a, 2^b)` for the four types with exceptional irreducibles: `2^a` is
/// 2 for E7, H3 and 4 for E8, H4, and `2^{a+b}` is the 2-part of `|W|`.
pub fn expected_exceptional_profile(ty: Option<CoxeterType>) -> Option<(usize, u64)> {
    let count = match ty? {
        CoxeterType::E7 | CoxeterType::H3 => 2u64,
        CoxeterType::E8 | CoxeterType::H4 => 4,
        _ => return None,
    };
    let order = crate::coxeter::known_order(ty?);
    let two_part = 1u128 << order.trailing_zeros();
    Some((count as usize, (two_part / count as u128) as u64))
}

pub fn classify_involutions(g: &GroupTable, a: &AFunction, cells: &CellPartition) -> Vec<InvolutionRecord> {
    g.elements()
        .filter(|&x| g.inverse(x) == x)
        .map(|x| InvolutionRecord {
            element: x,
            word: g.render_word(x),
            length: g.length(x),
            a: a.get(x),
            ordinary: g.length(x) % 2 == a.get(x) % 2,
            two_sided_cell: cells.two_sided(x) as u32,
            left_cell: cells.left(x) as u32,
        })
        .collect()
}

/// Special ⟺ `a_E = b_E`; exactly one per two-sided cell.
pub fn special_flag(records: &mut [IrrepRecord], cell_count: usize) -> Result<Vec<usize>> {
    let mut per_cell = vec![Vec::new(); cell_count];
    for r in records.iter_mut() {
        r.special = r.a == r.b;
        if r.special {
            per_cell[r.cell].push(r.index);
        }
    }
    per_cell
        .into_iter()
        .enumerate()
        .map(|(c, s)| match s[..] {
            [one] => Ok(one),
            _ => Err(Error::internal(format!(
                "two-sided cell {c} has {} special representations",
                s.len()
            ))),
        })
        .collect()
}

/// Full per-irrep pipeline and the derived cell, involution and module data.
pub fn classify(art: &Artifacts, par: Parallelism) -> Result<Classification> {
    let g = &art.group;
    let tab = &art.table;
    let cells = &art.cells;
    let charpolys = reflection_charpolys(g, tab)?;
    let rows: Vec<usize> = (0..tab.len()).collect();
    let per_irrep = par::map(&rows, par, |&i| -> Result<IrrepRecord> {
        let jt = art.phi.j_traces(tab, i)?;
        let hecke = hecke_character(g, &art.phi, &art.dagger, &jt, tab, i)?;
        let mut support: Vec<usize> = g
            .elements()
            .filter(|&z| !jt[z as usize].is_zero())
            .map(|z| cells.two_sided(z))
            .collect();
        support.sort_unstable();
        support.dedup();
        let [cell] = support[..] else {
            return Err(Error::internal(format!(
                "{} has nonzero j-traces on {} two-sided cells",
                tab.names[i],
                support.len()
            )));
        };
        let fd = fake_degree(g, tab, &charpolys, i)?;
        let palindromic = fd.is_palindromic()?.is_some();
        Ok(IrrepRecord {
            index: i,
            label: tab.names[i].clone(),
            dim: tab.dims[i],
            cell,
            a: art.a.get(cells.two_sided_cells[cell][0]),
            b: fd.valuation().unwrap() as u32,
            fake_degree: fd,
            ordinary: is_ordinary(&hecke),
            hecke,
            j_traces: jt,
            palindromic,
            special: false,
            sign_twist: tab.tensor_sign(i)?.0,
        })
    });
    let mut irreps = per_irrep.into_iter().collect::<Result<Vec<_>>>()?;
    let cell_count = cells.two_sided_cells.len();
    let specials = special_flag(&mut irreps, cell_count)?;

    let orientation = detect_orientation(g, &art.h, cells, tab)?;
    let left_modules = (0..cells.left_cells.len())
        .map(|i| left_cell_module(g, &art.h, cells, tab, i, orientation))
        .collect::<Result<Vec<_>>>()?;

    let cell_records: Vec<CellRecord> = (0..cell_count)
        .map(|c| {
            let members: Vec<usize> = irreps.iter().filter(|r| r.cell == c).map(|r| r.index).collect();
            CellRecord {
                id: c,
                a: art.a.get(cells.two_sided_cells[c][0]),
                size: cells.two_sided_cells[c].len(),
                left_cells: cells.left_cells_in(c),
                exceptional: members.iter().any(|&i| !irreps[i].ordinary),
                irreps: members,
                special: Some(specials[c]),
            }
        })
        .collect();

    let involutions = classify_involutions(g, &art.a, cells);
    let expected_profile = expected_exceptional_profile(g.datum().coxeter_type());
    let mut out = Classification {
        irreps,
        involutions,
        cells: cell_records,
        orientation,
        left_modules,
        expected_profile,
        checks: Vec::new(),
    };
    out.checks = invariant_checks(g, art, &out);
    Ok(out)
}

impl Classification {
    pub fn exceptional(&self) -> Vec<usize> {
        self.irreps.iter().filter(|r| !r.ordinary).map(|r| r.index).collect()
    }

    /// Exceptional count and their dimensions.
    pub fn observed_profile(&self) -> (usize, Vec<u64>) {
        let ex = self.exceptional();
        (ex.len(), ex.iter().map(|&i| self.irreps[i].dim).collect())
    }

    pub fn profile_agrees(&self) -> bool {
        let (count, dims) = self.observed_profile();
        match self.expected_profile {
            None => count == 0,
            Some((c, d)) => count == c && dims.iter().all(|&x| x == d),
        }
    }

    pub fn cell_is_exceptional(&self, c: usize) -> bool {
        self.cells[c].exceptional
    }
}

fn check(name: &str, ok: bool, detail: String) -> CheckRecord {
    CheckRecord {
        name: name.into(),
        ok,
        detail,
    }
}

fn invariant_checks(g: &GroupTable, art: &Artifacts, cl: &Classification) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let (count, dims) = cl.observed_profile();
    out.push(check(
        "exceptional-profile",
        cl.profile_agrees(),
        format!(
            "expected {:?}, observed {count} of dimensions {dims:?}",
            cl.expected_profile
        ),
    ));

    let mixed: Vec<usize> = cl
        .cells
        .iter()
        .filter(|c| {
            let kinds: Vec<bool> = c.irreps.iter().map(|&i| cl.irreps[i].ordinary).collect();
            kinds.iter().any(|&k| k) && kinds.iter().any(|&k| !k)
        })
        .map(|c| c.id)
        .collect();
    out.push(check(
        "fibre-constant-kind",
        mixed.is_empty(),
        format!("mixed cells: {mixed:?}"),
    ));

    let covered: usize = cl.cells.iter().map(|c| c.irreps.len()).sum();
    out.push(check(
        "fibres-exhaustive",
        covered == cl.irreps.len() && cl.cells.iter().all(|c| !c.irreps.is_empty()),
        format!("{covered} irreps over {} cells", cl.cells.len()),
    ));

    // Parity bridge: E ordinary, x ~_L x⁻¹, tr(t_x) ≠ 0 ⟹ l(x) + a(x) even.
    let mut bridge = Vec::new();
    for r in cl.irreps.iter().filter(|r| r.ordinary) {
        for x in g.elements() {
            if art.cells.same_left(x, g.inverse(x))
                && !r.j_traces[x as usize].is_zero()
                && (g.length(x) + art.a.get(x)) % 2 == 1
            {
                bridge.push(format!("{} at {}", r.label, g.render_word(x)));
            }
        }
    }
    out.push(check("parity-bridge", bridge.is_empty(), bridge.join(", ")));

    // Σ_E dim(E)·P_E = Π (1 + X + … + X^{d_i − 1})
    let mut total = IntPoly::zero();
    for r in &cl.irreps {
        total = &total + &r.fake_degree.scale(&(r.dim as i64));
    }
    let poincare = IntPoly::from_coeffs(0, g.poincare_coeffs().iter().map(|&c| c as i64).collect());
    out.push(check(
        "fake-degree-sum",
        total == poincare,
        format!("Σ dim·P_E = {}", total.render("X")),
    ));

    let bad_b: Vec<String> = cl
        .irreps
        .iter()
        .filter(|r| r.b < r.a)
        .map(|r| format!("{} (a = {}, b = {})", r.label, r.a, r.b))
        .collect();
    out.push(check("b-at-least-a", bad_b.is_empty(), bad_b.join(", ")));

    let mut missing = Vec::new();
    for c in cl.cells.iter().filter(|c| !c.exceptional) {
        let special = c.special.unwrap();
        for &l in &c.left_cells {
            if cl.left_modules[l][special] == 0 {
                missing.push(format!("left cell {l}"));
            }
        }
    }
    out.push(check("special-in-left-cells", missing.is_empty(), missing.join(", ")));
    out
}
