use std::fmt::Write;

use serde::Serialize;

use crate::coxeter::GroupTable;

use super::asymptotic::AFunction;
use super::cells::CellPartition;

#[derive(Clone, Debug, Serialize)]
pub struct ElementCells {
    pub index: u32,
    pub word: String,
    pub length: u32,
    pub left_cell: u32,
    pub right_cell: u32,
    pub two_sided_cell: u32,
    pub a: Option<u32>,
    pub distinguished: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellSummary {
    pub id: usize,
    pub size: usize,
    pub members: Vec<String>,
    pub two_sided_cell: u32,
    pub a: Option<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellReport {
    pub schema_version: u32,
    pub group: String,
    pub order: usize,
    pub left_cell_count: usize,
    pub right_cell_count: usize,
    pub two_sided_cell_count: usize,
    pub elements: Vec<ElementCells>,
    pub left_cells: Vec<CellSummary>,
    pub two_sided_cells: Vec<CellSummary>,
    /// `[i, j]`: left cell `j` lies below left cell `i`.
    pub left_preorder: Vec<(u32, u32)>,
    pub two_sided_preorder: Vec<(u32, u32)>,
}

pub fn cell_report(
    g: &GroupTable,
    cells: &CellPartition,
    a: Option<&AFunction>,
    distinguished: Option<&[u32]>,
) -> CellReport {
    let words = |m: &[u32]| m.iter().map(|&x| g.render_word(x)).collect::<Vec<_>>();
    let elements = g
        .elements()
        .map(|x| ElementCells {
            index: x,
            word: g.render_word(x),
            length: g.length(x),
            left_cell: cells.left_of[x as usize],
            right_cell: cells.right_of[x as usize],
            two_sided_cell: cells.two_sided_of[x as usize],
            a: a.map(|a| a.get(x)),
            distinguished: distinguished.map(|d| d.binary_search(&x).is_ok()),
        })
        .collect();
    let summary = |id: usize, m: &Vec<u32>| CellSummary {
        id,
        size: m.len(),
        members: words(m),
        two_sided_cell: cells.two_sided_of[m[0] as usize],
        a: a.map(|a| a.get(m[0])),
    };
    CellReport {
        schema_version: 1,
        group: g.name().to_string(),
        order: g.order(),
        left_cell_count: cells.left_cells.len(),
        right_cell_count: cells.right_cells.len(),
        two_sided_cell_count: cells.two_sided_cells.len(),
        elements,
        left_cells: cells
            .left_cells
            .iter()
            .enumerate()
            .map(|(i, m)| summary(i, m))
            .collect(),
        two_sided_cells: cells
            .two_sided_cells
            .iter()
            .enumerate()
            .map(|(i, m)| summary(i, m))
            .collect(),
        left_preorder: cells.left_order.clone(),
        two_sided_preorder: cells.two_sided_order.clone(),
    }
}

impl CellReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "group {} (order {})", self.group, self.order);
        let _ = writeln!(
            s,
            "left cells: {}  right cells: {}  two-sided cells: {}",
            self.left_cell_count, self.right_cell_count, self.two_sided_cell_count
        );
        for c in &self.two_sided_cells {
            let a = c.a.map(|a| a.to_string()).unwrap_or_else(|| "?".into());
            let _ = writeln!(s, "\ntwo-sided cell {} (size {}, a = {a})", c.id, c.size);
            for l in self.left_cells.iter().filter(|l| l.two_sided_cell == c.id as u32) {
                let _ = writeln!(s, "  left cell {:>3}: {}", l.id, l.members.join(" "));
            }
        }
        s
    }

    /// One line per element.
    pub fn to_csv(&self) -> crate::Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "index",
            "word",
            "length",
            "left_cell",
            "right_cell",
            "two_sided_cell",
            "a",
            "distinguished",
        ])?;
        for e in &self.elements {
            w.write_record([
                e.index.to_string(),
                e.word.clone(),
                e.length.to_string(),
                e.left_cell.to_string(),
                e.right_cell.to_string(),
                e.two_sided_cell.to_string(),
                e.a.map(|a| a.to_string()).unwrap_or_default(),
                e.distinguished.map(|d| d.to_string()).unwrap_or_default(),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| crate::Error::internal(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }
}
