use serde::Serialize;

use crate::chartab::{CharacterTable, ClassFunction};
use crate::coxeter::{Elem, GroupTable};
use crate::error::{Error, Result};
use crate::exactnum::CycloNumber;
use crate::jring::CellPartition;
use crate::klbase::HTable;

/// How the raw `v = 1` action on a left cell relates to the module `[Γ]`.
///
/// The raw action sends `s` to `c_s − 1` on `span{c_y : y ∈ Γ}` modulo
/// lower cells. If that makes `[{e}]` the sign representation, every raw
/// character is twisted by the sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    Direct,
    SignTwisted,
}

/// Matrices of the generators on a left cell, `S[z][y] = h_{s,y,z}(1) − δ_{yz}`.
fn generator_matrices(g: &GroupTable, h: &HTable, cells: &CellPartition, cell: &[Elem]) -> Vec<Vec<Vec<i64>>> {
    let pos = |z: Elem| cell.binary_search(&z).ok();
    (0..g.rank())
        .map(|s| {
            let m = cell.len();
            let mut a = vec![vec![0i64; m]; m];
            for (j, &y) in cell.iter().enumerate() {
                a[j][j] -= 1;
                for (z, p) in h.row(g.generator(s), y) {
                    if !cells.same_left(z, y) {
                        continue;
                    }
                    if let Some(i) = pos(z) {
                        a[i][j] += p.eval_at_one().unwrap_or(0);
                    }
                }
            }
            a
        })
        .collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0 {
                for j in 0..n {
                    c[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    c
}

/// Character of the raw action on left cell `index`.
pub fn raw_cell_character(
    g: &GroupTable,
    h: &HTable,
    cells: &CellPartition,
    tab: &CharacterTable,
    index: usize,
) -> ClassFunction {
    let cell = &cells.left_cells[index];
    let gens = generator_matrices(g, h, cells, cell);
    let n = cell.len();
    tab.class_function(|c| {
        let w = tab.classes.classes[c].representative;
        let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
        for &s in g.word(w) {
            m = mat_mul(&m, &gens[s as usize]);
        }
        CycloNumber::from_int(&tab.field, (0..n).map(|i| m[i][i]).sum())
    })
}

/// Decide the orientation from `[{e}]`: trivial or sign, nothing else.
pub fn detect_orientation(
    g: &GroupTable,
    h: &HTable,
    cells: &CellPartition,
    tab: &CharacterTable,
) -> Result<Orientation> {
    let f = raw_cell_character(g, h, cells, tab, cells.left(0));
    if f == *tab.row(0) {
        Ok(Orientation::Direct)
    } else if f == tab.sign_function() {
        Ok(Orientation::SignTwisted)
    } else {
        Err(Error::internal(
            "the left cell {e} carries neither the trivial nor the sign representation",
        ))
    }
}

/// `[Γ]` as multiplicities per row of the character table.
pub fn left_cell_module(
    g: &GroupTable,
    h: &HTable,
    cells: &CellPartition,
    tab: &CharacterTable,
    index: usize,
    orientation: Orientation,
) -> Result<Vec<u64>> {
    let mut f = raw_cell_character(g, h, cells, tab, index);
    if orientation == Orientation::SignTwisted {
        f = f.pointwise(&tab.sign_function());
    }
    tab.decompose(&f)
}
