use std::fmt::Write;

use serde::Serialize;

use super::table::CharacterTable;

#[derive(Clone, Debug, Serialize)]
pub struct ClassEntry {
    pub index: usize,
    pub representative: String,
    pub length: u32,
    pub size: usize,
    pub element_order: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct IrrepEntry {
    pub label: String,
    pub dim: u64,
    pub values: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterTableReport {
    pub schema_version: u32,
    pub group: String,
    pub order: usize,
    /// Values live in `Q(E(conductor))`; `E(n)` is `exp(2πi/n)`.
    pub conductor: u32,
    pub classes: Vec<ClassEntry>,
    pub irreps: Vec<IrrepEntry>,
}

pub fn character_table_report(tab: &CharacterTable) -> CharacterTableReport {
    CharacterTableReport {
        schema_version: 1,
        group: tab.group.clone(),
        order: tab.group_order,
        conductor: tab.field.order(),
        classes: tab
            .classes
            .classes
            .iter()
            .enumerate()
            .map(|(i, c)| ClassEntry {
                index: i,
                representative: tab.class_words[i].clone(),
                length: tab.class_lengths[i],
                size: c.size,
                element_order: tab.class_orders[i],
            })
            .collect(),
        irreps: tab
            .irreps
            .iter()
            .enumerate()
            .map(|(i, r)| IrrepEntry {
                label: tab.names[i].clone(),
                dim: tab.dims[i],
                values: r.values.iter().map(|v| v.to_string()).collect(),
            })
            .collect(),
    }
}

impl CharacterTableReport {
    /// Aligned table: one column per class, headed by representative and
    /// class size.
    pub fn to_text(&self) -> String {
        let mut grid: Vec<Vec<String>> = Vec::new();
        let mut head = vec![String::new()];
        head.extend(self.classes.iter().map(|c| c.representative.clone()));
        grid.push(head);
        let mut sizes = vec!["size".to_string()];
        sizes.extend(self.classes.iter().map(|c| c.size.to_string()));
        grid.push(sizes);
        for r in &self.irreps {
            let mut line = vec![r.label.clone()];
            line.extend(r.values.iter().cloned());
            grid.push(line);
        }
        let cols = grid[0].len();
        let width: Vec<usize> = (0..cols)
            .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut s = String::new();
        let _ = writeln!(
            s,
            "character table of {} (order {}, {} classes, values in Q(E({})))",
            self.group,
            self.order,
            self.classes.len(),
            self.conductor
        );
        for row in &grid {
            let cells: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(c, x)| {
                    if c == 0 {
                        format!("{x:<w$}", w = width[c])
                    } else {
                        format!("{x:>w$}", w = width[c])
                    }
                })
                .collect();
            let _ = writeln!(s, "{}", cells.join("  ").trim_end());
        }
        s
    }

    pub fn to_csv(&self) -> crate::Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut head = vec!["label".to_string(), "dim".to_string()];
        head.extend(self.classes.iter().map(|c| c.representative.clone()));
        w.write_record(&head)?;
        for r in &self.irreps {
            let mut line = vec![r.label.clone(), r.dim.to_string()];
            line.extend(r.values.iter().cloned());
            w.write_record(&line)?;
        }
        let bytes = w.into_inner().map_err(|e| crate::Error::internal(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }
}
