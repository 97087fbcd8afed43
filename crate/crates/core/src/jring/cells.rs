use std::collections::BTreeSet;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::coxeter::{Elem, GroupTable};
use crate::klbase::HTable;

/// Left, right and two-sided cells with their preorders.
///
/// Cells are numbered by increasing minimal member, so `{e}` is cell 0 of
/// every kind. Preorder edges `(i, j)` mean cell `j` lies below cell `i`
/// (`Γ_j ≤ Γ_i`) and are the covering-or-not edges of the condensation,
/// deduplicated and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellPartition {
    pub left_of: Vec<u32>,
    pub right_of: Vec<u32>,
    pub two_sided_of: Vec<u32>,
    pub left_cells: Vec<Vec<Elem>>,
    pub right_cells: Vec<Vec<Elem>>,
    pub two_sided_cells: Vec<Vec<Elem>>,
    pub left_order: Vec<(u32, u32)>,
    pub two_sided_order: Vec<(u32, u32)>,
}

/// Strongly connected components, numbered by minimal member; returns the
/// component of every vertex and the member lists.
fn components(n: usize, edges: &[(Elem, Elem)]) -> (Vec<u32>, Vec<Vec<Elem>>) {
    let mut graph: DiGraph<(), ()> = DiGraph::with_capacity(n, edges.len());
    for _ in 0..n {
        graph.add_node(());
    }
    for &(a, b) in edges {
        graph.add_edge(a.into(), b.into(), ());
    }
    let mut comps: Vec<Vec<Elem>> = tarjan_scc(&graph)
        .into_iter()
        .map(|c| {
            let mut v: Vec<Elem> = c.into_iter().map(|i| i.index() as Elem).collect();
            v.sort_unstable();
            v
        })
        .collect();
    comps.sort_unstable_by_key(|c| c[0]);
    let mut of = vec![0u32; n];
    for (i, c) in comps.iter().enumerate() {
        for &x in c {
            of[x as usize] = i as u32;
        }
    }
    (of, comps)
}

fn condensation(edges: &[(Elem, Elem)], of: &[u32]) -> Vec<(u32, u32)> {
    let set: BTreeSet<(u32, u32)> = edges
        .iter()
        .map(|&(a, b)| (of[a as usize], of[b as usize]))
        .filter(|(a, b)| a != b)
        .collect();
    set.into_iter().collect()
}

/// Cells from the generator rows: `z ≤_L y` is generated by `h_{s,y,z} ≠ 0`.
pub fn compute_cells(g: &GroupTable, h: &HTable) -> CellPartition {
    let n = g.order();
    let mut left_edges: Vec<(Elem, Elem)> = Vec::new();
    for y in g.elements() {
        for s in 0..g.rank() {
            for (z, _) in h.row(g.generator(s), y) {
                if z != y {
                    left_edges.push((y, z));
                }
            }
        }
    }
    left_edges.sort_unstable();
    left_edges.dedup();
    let (left_of, left_cells) = components(n, &left_edges);

    let inv = |x: Elem| g.inverse(x);
    let right_of: Vec<u32> = (0..n as Elem).map(|x| left_of[inv(x) as usize]).collect();
    let mut right_cells: Vec<Vec<Elem>> = left_cells
        .iter()
        .map(|c| {
            let mut v: Vec<Elem> = c.iter().map(|&x| inv(x)).collect();
            v.sort_unstable();
            v
        })
        .collect();
    right_cells.sort_unstable_by_key(|c| c[0]);
    let mut right_of = right_of;
    for (i, c) in right_cells.iter().enumerate() {
        for &x in c {
            right_of[x as usize] = i as u32;
        }
    }

    let mut both = left_edges.clone();
    both.extend(left_edges.iter().map(|&(a, b)| (inv(a), inv(b))));
    both.sort_unstable();
    both.dedup();
    let (two_sided_of, two_sided_cells) = components(n, &both);

    CellPartition {
        left_order: condensation(&left_edges, &left_of),
        two_sided_order: condensation(&both, &two_sided_of),
        left_of,
        right_of,
        two_sided_of,
        left_cells,
        right_cells,
        two_sided_cells,
    }
}

impl CellPartition {
    pub fn left(&self, x: Elem) -> usize {
        self.left_of[x as usize] as usize
    }

    pub fn right(&self, x: Elem) -> usize {
        self.right_of[x as usize] as usize
    }

    pub fn two_sided(&self, x: Elem) -> usize {
        self.two_sided_of[x as usize] as usize
    }

    pub fn same_left(&self, x: Elem, y: Elem) -> bool {
        self.left_of[x as usize] == self.left_of[y as usize]
    }

    /// Left cells contained in a two-sided cell.
    pub fn left_cells_in(&self, c: usize) -> Vec<usize> {
        (0..self.left_cells.len())
            .filter(|&i| self.two_sided(self.left_cells[i][0]) == c)
            .collect()
    }

    /// Is left cell `lower` reachable downward from left cell `upper`?
    pub fn left_below(&self, lower: usize, upper: usize) -> bool {
        if lower == upper {
            return true;
        }
        let mut seen = vec![false; self.left_cells.len()];
        let mut stack = vec![upper];
        seen[upper] = true;
        while let Some(c) = stack.pop() {
            let start = self.left_order.partition_point(|&(a, _)| (a as usize) < c);
            for &(a, b) in &self.left_order[start..] {
                if a as usize != c {
                    break;
                }
                let b = b as usize;
                if b == lower {
                    return true;
                }
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        false
    }
}
