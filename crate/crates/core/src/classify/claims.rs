use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::Coeff;

use super::pipeline::Artifacts;
use super::records::Classification;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    /// Some irrep has `tr(t_x, E_∞) ≠ 0` whenever `x ~_L x⁻¹`.
    TraceNonvanishing,
    /// Ordinary cells: `x ~_L x⁻¹` forces `l(x) ≡ a(x)`.
    OrdinaryParity,
    /// Exceptional cells: one ordinary and one exceptional involution per left cell.
    ExceptionalInvolutions,
    /// Ordinary ⟺ palindromic fake degree.
    Palindromic,
    /// `E_c ⊗ sgn` special ⟺ `c` ordinary.
    SpecialTwist,
}

impl ClaimId {
    pub const ALL: [ClaimId; 5] = [
        ClaimId::TraceNonvanishing,
        ClaimId::OrdinaryParity,
        ClaimId::ExceptionalInvolutions,
        ClaimId::Palindromic,
        ClaimId::SpecialTwist,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::TraceNonvanishing => "1.2b",
            ClaimId::OrdinaryParity => "1.3a",
            ClaimId::ExceptionalInvolutions => "1.3c",
            ClaimId::Palindromic => "1.5a",
            ClaimId::SpecialTwist => "1.6b",
        }
    }

    /// Comma-separated list; `all` selects every claim.
    pub fn parse_list(s: &str) -> Result<Vec<ClaimId>> {
        if s.trim() == "all" {
            return Ok(Self::ALL.to_vec());
        }
        let mut out: Vec<ClaimId> = s.split(',').map(|t| t.trim().parse()).collect::<Result<_>>()?;
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| {
            Error::usage(format!(
                "unknown claim {s:?}; expected one of 1.2b, 1.3a, 1.3c, 1.5a, 1.6b"
            ))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    pub status: Status,
    pub summary: String,
    /// Counterexamples on failure; supporting data on success.
    pub witnesses: Vec<String>,
    /// Kept out of serialized reports so they stay byte-stable.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

struct Outcome {
    failures: Vec<String>,
    support: Vec<String>,
    summary: String,
}

pub fn verify_claim(id: ClaimId, art: &Artifacts, cl: &Classification) -> ClaimReport {
    let start = Instant::now();
    let o = match id {
        ClaimId::TraceNonvanishing => trace_nonvanishing(art, cl),
        ClaimId::OrdinaryParity => ordinary_parity(art, cl),
        ClaimId::ExceptionalInvolutions => exceptional_involutions(art, cl),
        ClaimId::Palindromic => palindromic(cl),
        ClaimId::SpecialTwist => special_twist(cl),
    };
    let status = if o.failures.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    ClaimReport {
        claim: id.name().to_string(),
        status,
        summary: o.summary,
        witnesses: if o.failures.is_empty() { o.support } else { o.failures },
        elapsed: start.elapsed(),
    }
}

pub fn verify_claims(ids: &[ClaimId], art: &Artifacts, cl: &Classification) -> Vec<ClaimReport> {
    ids.iter().map(|&id| verify_claim(id, art, cl)).collect()
}

fn trace_nonvanishing(art: &Artifacts, cl: &Classification) -> Outcome {
    let g = &art.group;
    let mut checked = 0;
    let mut failures = Vec::new();
    for x in g.elements() {
        if !art.cells.same_left(x, g.inverse(x)) {
            continue;
        }
        checked += 1;
        if cl.irreps.iter().all(|r| r.j_traces[x as usize].is_zero()) {
            failures.push(format!("{}: tr(t_x, E) = 0 for every irrep", g.render_word(x)));
        }
    }
    Outcome {
        summary: format!(
            "{checked} elements with x ~_L x^-1, {} without a nonzero trace",
            failures.len()
        ),
        failures,
        support: Vec::new(),
    }
}

fn ordinary_parity(art: &Artifacts, cl: &Classification) -> Outcome {
    let g = &art.group;
    let mut checked = 0;
    let mut failures = Vec::new();
    for c in cl.cells.iter().filter(|c| !c.exceptional) {
        for &x in &art.cells.two_sided_cells[c.id] {
            if !art.cells.same_left(x, g.inverse(x)) {
                continue;
            }
            checked += 1;
            let (l, a) = (g.length(x), art.a.get(x));
            if l % 2 != a % 2 {
                failures.push(format!("{} in cell {}: l = {l}, a = {a}", g.render_word(x), c.id));
            }
        }
    }
    let cells = cl.cells.iter().filter(|c| !c.exceptional).count();
    Outcome {
        summary: format!("{cells} ordinary two-sided cells, {checked} elements with x ~_L x^-1"),
        failures,
        support: Vec::new(),
    }
}

fn exceptional_involutions(art: &Artifacts, cl: &Classification) -> Outcome {
    let g = &art.group;
    let mut failures = Vec::new();
    let mut support = Vec::new();
    let exceptional: Vec<_> = cl.cells.iter().filter(|c| c.exceptional).collect();
    let w0 = g.w0();
    let central = (0..g.rank()).all(|s| {
        let t = g.generator(s);
        g.mul(w0, t) == g.mul(t, w0)
    });
    for c in &exceptional {
        let m = c.left_cells.len() as u64;
        if c.irreps.len() != 2 {
            failures.push(format!("cell {}: |Irr^c| = {}", c.id, c.irreps.len()));
        }
        for &i in &c.irreps {
            if cl.irreps[i].dim != m {
                failures.push(format!(
                    "cell {}: {} has dimension {}, the cell has {m} left cells",
                    c.id, cl.irreps[i].label, cl.irreps[i].dim
                ));
            }
        }
        for &l in &c.left_cells {
            let inv: Vec<_> = cl.involutions.iter().filter(|r| r.left_cell as usize == l).collect();
            let ord: Vec<&str> = inv.iter().filter(|r| r.ordinary).map(|r| r.word.as_str()).collect();
            let exc: Vec<&str> = inv.iter().filter(|r| !r.ordinary).map(|r| r.word.as_str()).collect();
            if ord.len() == 1 && exc.len() == 1 {
                support.push(format!("left cell {l}: ordinary {}, exceptional {}", ord[0], exc[0]));
            } else {
                failures.push(format!("left cell {l}: ordinary {ord:?}, exceptional {exc:?}"));
            }
        }
        if central {
            for r in cl.involutions.iter().filter(|r| r.two_sided_cell as usize == c.id) {
                let y = g.mul(w0, r.element);
                let twin = &cl.involutions.iter().find(|t| t.element == y);
                match twin {
                    Some(t) if t.ordinary != r.ordinary && cl.cells[t.two_sided_cell as usize].exceptional => {}
                    _ => failures.push(format!("w0 twist of {} does not flip the parity class", r.word)),
                }
            }
        }
    }
    let summary = if exceptional.is_empty() {
        "no exceptional two-sided cells (vacuous)".to_string()
    } else {
        format!(
            "{} exceptional two-sided cells{}",
            exceptional.len(),
            if central { ", w0 twist checked" } else { "" }
        )
    };
    Outcome {
        failures,
        support,
        summary,
    }
}

fn palindromic(cl: &Classification) -> Outcome {
    let failures: Vec<String> = cl
        .irreps
        .iter()
        .filter(|r| r.ordinary != r.palindromic)
        .map(|r| {
            format!(
                "{}: {}, fake degree {} {}",
                r.label,
                if r.ordinary { "ordinary" } else { "exceptional" },
                r.fake_degree.render("X"),
                if r.palindromic {
                    "palindromic"
                } else {
                    "not palindromic"
                }
            )
        })
        .collect();
    let non: Vec<String> = cl
        .irreps
        .iter()
        .filter(|r| !r.palindromic)
        .map(|r| r.label.clone())
        .collect();
    Outcome {
        summary: format!("{} irreps, {} non-palindromic", cl.irreps.len(), non.len()),
        failures,
        support: non,
    }
}

fn special_twist(cl: &Classification) -> Outcome {
    let mut failures = Vec::new();
    let mut support = Vec::new();
    for c in &cl.cells {
        let Some(e) = c.special else { continue };
        let twist = &cl.irreps[cl.irreps[e].sign_twist];
        let line = format!(
            "cell {} ({}): E_c = {}, E_c ⊗ sgn = {} ({})",
            c.id,
            if c.exceptional { "exceptional" } else { "ordinary" },
            cl.irreps[e].label,
            twist.label,
            if twist.special { "special" } else { "not special" }
        );
        if twist.special == c.exceptional {
            failures.push(line);
        } else if c.exceptional {
            support.push(line);
        }
    }
    Outcome {
        summary: format!("{} two-sided cells", cl.cells.len()),
        failures,
        support,
    }
}
