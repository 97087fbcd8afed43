use std::fmt::Write;

use serde::Serialize;

use super::cellmod::Orientation;
use super::claims::ClaimReport;
use super::pipeline::Artifacts;
use super::records::{CheckRecord, Classification, InvolutionRecord};

#[derive(Clone, Debug, Serialize)]
pub struct IrrepEntry {
    pub label: String,
    pub dim: u64,
    pub cell: usize,
    pub a: u32,
    pub b: u32,
    /// Coefficients of `X^0, X^1, …`.
    pub fake_degree: Vec<i64>,
    pub ordinary: bool,
    pub special: bool,
    pub palindromic: bool,
    pub sign_twist: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellEntry {
    pub id: usize,
    pub a: u32,
    pub size: usize,
    pub exceptional: bool,
    pub irreps: Vec<String>,
    pub special: Option<String>,
    pub left_cells: Vec<LeftCellEntry>,
}

/// `[Γ]` as a list of labels with multiplicity.
#[derive(Clone, Debug, Serialize)]
pub struct LeftCellEntry {
    pub id: usize,
    pub size: usize,
    pub module: Vec<(String, u64)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProfileEntry {
    pub count: usize,
    pub dim: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub schema_version: u32,
    pub group: String,
    pub order: usize,
    pub orientation: Orientation,
    pub expected_exceptional: Option<ProfileEntry>,
    pub profile_agrees: bool,
    pub irreps: Vec<IrrepEntry>,
    pub cells: Vec<CellEntry>,
    pub involutions: Vec<InvolutionRecord>,
    pub checks: Vec<CheckRecord>,
    pub claims: Vec<ClaimReport>,
}

pub fn classification_report(art: &Artifacts, cl: &Classification, claims: Vec<ClaimReport>) -> ClassificationReport {
    let label = |i: usize| cl.irreps[i].label.clone();
    ClassificationReport {
        schema_version: 1,
        group: art.group.name().to_string(),
        order: art.group.order(),
        orientation: cl.orientation,
        expected_exceptional: cl.expected_profile.map(|(count, dim)| ProfileEntry { count, dim }),
        profile_agrees: cl.profile_agrees(),
        irreps: cl
            .irreps
            .iter()
            .map(|r| {
                let (low, dense) = r.fake_degree.dense();
                let mut coeffs = vec![0i64; low.max(0) as usize];
                coeffs.extend_from_slice(dense);
                IrrepEntry {
                    label: r.label.clone(),
                    dim: r.dim,
                    cell: r.cell,
                    a: r.a,
                    b: r.b,
                    fake_degree: coeffs,
                    ordinary: r.ordinary,
                    special: r.special,
                    palindromic: r.palindromic,
                    sign_twist: label(r.sign_twist),
                }
            })
            .collect(),
        cells: cl
            .cells
            .iter()
            .map(|c| CellEntry {
                id: c.id,
                a: c.a,
                size: c.size,
                exceptional: c.exceptional,
                irreps: c.irreps.iter().map(|&i| label(i)).collect(),
                special: c.special.map(label),
                left_cells: c
                    .left_cells
                    .iter()
                    .map(|&l| LeftCellEntry {
                        id: l,
                        size: art.cells.left_cells[l].len(),
                        module: cl.left_modules[l]
                            .iter()
                            .enumerate()
                            .filter(|(_, &m)| m > 0)
                            .map(|(i, &m)| (label(i), m))
                            .collect(),
                    })
                    .collect(),
            })
            .collect(),
        involutions: cl.involutions.clone(),
        checks: cl.checks.clone(),
        claims,
    }
}

fn flag(b: bool, yes: &str, no: &str) -> String {
    if b { yes } else { no }.to_string()
}

fn module_text(m: &[(String, u64)]) -> String {
    m.iter()
        .map(|(l, k)| if *k == 1 { l.clone() } else { format!("{k}·{l}") })
        .collect::<Vec<_>>()
        .join(" + ")
}

impl ClassificationReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "classification of {} (order {})", self.group, self.order);
        let _ = writeln!(
            s,
            "left cell module orientation: {}",
            serde_json::to_value(self.orientation).unwrap().as_str().unwrap()
        );
        let expected = match &self.expected_exceptional {
            Some(p) => format!("{} of dimension {}", p.count, p.dim),
            None => "none".into(),
        };
        let observed = self.irreps.iter().filter(|r| !r.ordinary).count();
        let _ = writeln!(
            s,
            "exceptional irreps: {observed} (expected {expected}){}",
            if self.profile_agrees { "" } else { "  MISMATCH" }
        );
        let _ = writeln!(s, "\nirreps");
        let width = self.irreps.iter().map(|r| r.label.len()).max().unwrap_or(0);
        for r in &self.irreps {
            let _ = writeln!(
                s,
                "  {:<width$}  dim {:>3}  cell {:>3}  a {:>2}  b {:>2}  {:<11}  {:<11}  P = {}",
                r.label,
                r.dim,
                r.cell,
                r.a,
                r.b,
                flag(r.ordinary, "ordinary", "exceptional"),
                flag(r.special, "special", "-"),
                render_coeffs(&r.fake_degree),
            );
        }
        let _ = writeln!(s, "\ntwo-sided cells");
        for c in &self.cells {
            let _ = writeln!(
                s,
                "  cell {} (size {}, a = {}, {}): {}; special {}",
                c.id,
                c.size,
                c.a,
                flag(c.exceptional, "exceptional", "ordinary"),
                c.irreps.join(", "),
                c.special.as_deref().unwrap_or("-"),
            );
            for l in &c.left_cells {
                let _ = writeln!(
                    s,
                    "    left cell {:>3} (size {}): {}",
                    l.id,
                    l.size,
                    module_text(&l.module)
                );
            }
        }
        let _ = writeln!(s, "\ninvolutions");
        let width = self.involutions.iter().map(|i| i.word.len()).max().unwrap_or(0);
        for i in &self.involutions {
            let _ = writeln!(
                s,
                "  {:<width$}  l {:>2}  a {:>2}  cell {:>3}  left {:>3}  {}",
                i.word,
                i.length,
                i.a,
                i.two_sided_cell,
                i.left_cell,
                flag(i.ordinary, "ordinary", "exceptional")
            );
        }
        let _ = writeln!(s, "\nchecks");
        for c in &self.checks {
            let _ = writeln!(
                s,
                "  {:<24} {}",
                c.name,
                flag(c.ok, "ok", &format!("FAILED: {}", c.detail))
            );
        }
        if !self.claims.is_empty() {
            s.push('\n');
            s.push_str(&claims_text(&self.claims));
        }
        s
    }

    /// The irrep table, one row per irrep.
    pub fn to_csv(&self) -> crate::Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "label",
            "dim",
            "cell",
            "a",
            "b",
            "fake_degree",
            "ordinary",
            "special",
            "palindromic",
            "sign_twist",
        ])?;
        for r in &self.irreps {
            w.write_record([
                r.label.clone(),
                r.dim.to_string(),
                r.cell.to_string(),
                r.a.to_string(),
                r.b.to_string(),
                render_coeffs(&r.fake_degree),
                r.ordinary.to_string(),
                r.special.to_string(),
                r.palindromic.to_string(),
                r.sign_twist.clone(),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| crate::Error::internal(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }
}

fn render_coeffs(c: &[i64]) -> String {
    crate::exactnum::IntPoly::from_coeffs(0, c.to_vec()).render("X")
}

fn claims_text(claims: &[ClaimReport]) -> String {
    let mut s = String::from("claims\n");
    for c in claims {
        let _ = writeln!(s, "  {}  {}  {}", c.claim, flag(c.passed(), "PASS", "FAIL"), c.summary);
        for w in &c.witnesses {
            let _ = writeln!(s, "        {w}");
        }
    }
    s
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub group: String,
    pub order: usize,
    pub all_pass: bool,
    pub claims: Vec<ClaimReport>,
}

impl VerifyReport {
    pub fn new(group: &str, order: usize, claims: Vec<ClaimReport>) -> Self {
        VerifyReport {
            schema_version: 1,
            group: group.to_string(),
            order,
            all_pass: claims.iter().all(|c| c.passed()),
            claims,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "verification for {} (order {}): {}\n",
            self.group,
            self.order,
            flag(self.all_pass, "all claims pass", "FAILED")
        );
        s.push_str(&claims_text(&self.claims));
        s
    }

    pub fn to_csv(&self) -> crate::Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["group", "claim", "status", "summary", "witnesses"])?;
        for c in &self.claims {
            w.write_record([
                self.group.clone(),
                c.claim.clone(),
                flag(c.passed(), "pass", "fail"),
                c.summary.clone(),
                c.witnesses.join("; "),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| crate::Error::internal(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }
}
