use std::fmt::Write;
use std::fs;
use std::time::Instant;

use serde::Serialize;

use klcells::chartab::{character_table, character_table_report};
use klcells::classify::{
    build_artifacts, classification_report, classify, kl_and_h, load_group, verify_claims, ClaimId, PipelineConfig,
    VerifyReport,
};
use klcells::coxeter::{conjugacy_classes, CoxeterType, GroupSummary, GroupTable};
use klcells::jring::{cell_report, compute_a, compute_cells, compute_gamma, distinguished_involutions};
use klcells::klbase::HScope;
use klcells::{Error, Parallelism, Result};

use crate::{Cli, Command, Format};

/// Groups above this order need `--heavy` for anything past `group` and
/// `chartable`.
const DESK_SCALE_ORDER: usize = 1000;

const DEFAULT_SET: [&str; 6] = ["I2(3)", "I2(5)", "I2(7)", "A3", "B3", "H3"];
const HEAVY_SET: [&str; 2] = ["F4", "H4"];

pub struct Output {
    pub text: String,
    pub passed: bool,
}

fn ok(text: String) -> Output {
    Output { text, passed: true }
}

fn config(cli: &Cli) -> Result<PipelineConfig> {
    if let Some(dir) = &cli.cache_dir {
        fs::create_dir_all(dir)
            .map_err(|e| Error::Usage(format!("cache directory {} is not writable: {e}", dir.display())))?;
    }
    let mut cfg = PipelineConfig {
        cache_dir: cli.cache_dir.clone(),
        par: Parallelism::with_threads(cli.jobs),
        ..PipelineConfig::default()
    };
    if let Some(m) = cli.max_order {
        cfg.max_order = m;
    }
    Ok(cfg)
}

fn parse_type(cli: &Cli) -> Result<CoxeterType> {
    cli.ty
        .as_deref()
        .ok_or_else(|| Error::Usage("--type is required for this command".into()))?
        .parse()
}

fn heavy_guard(cli: &Cli, g: &GroupTable) -> Result<()> {
    if g.order() > DESK_SCALE_ORDER && !cli.heavy {
        return Err(Error::Refused(format!(
            "{} has order {}, above the desk-scale limit {DESK_SCALE_ORDER}; pass --heavy to run the full pipeline",
            g.name(),
            g.order()
        )));
    }
    Ok(())
}

fn json<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn notify(notices: &[String]) {
    for n in notices {
        eprintln!("klcells: {n}");
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let cfg = config(cli)?;
    match cli.command {
        Command::Group => cmd_group(cli, &cfg),
        Command::Cells => cmd_cells(cli, &cfg),
        Command::Chartable => cmd_chartable(cli, &cfg),
        Command::Classify => cmd_classify(cli, &cfg),
        Command::Verify => cmd_verify(cli, &cfg),
    }
}

#[derive(Serialize)]
struct ClassRow {
    index: usize,
    representative: String,
    length: u32,
    size: usize,
    element_order: u32,
}

#[derive(Serialize)]
struct GroupReport {
    schema_version: u32,
    #[serde(flatten)]
    summary: GroupSummary,
    classes: Vec<ClassRow>,
}

fn cmd_group(cli: &Cli, cfg: &PipelineConfig) -> Result<Output> {
    let g = load_group(parse_type(cli)?, cfg)?;
    let classes = conjugacy_classes(&g);
    let report = GroupReport {
        schema_version: 1,
        summary: g.summary(),
        classes: classes
            .classes
            .iter()
            .enumerate()
            .map(|(i, c)| ClassRow {
                index: i,
                representative: g.render_word(c.representative),
                length: g.length(c.representative),
                size: c.size,
                element_order: g.element_order(c.representative),
            })
            .collect(),
    };
    let text = match cli.format {
        Format::Json => json(&report)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["index", "representative", "length", "size", "element_order"])
                .map_err(Error::from)?;
            for c in &report.classes {
                w.write_record([
                    c.index.to_string(),
                    c.representative.clone(),
                    c.length.to_string(),
                    c.size.to_string(),
                    c.element_order.to_string(),
                ])
                .map_err(Error::from)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Error::Internal(e.to_string()))?).expect("csv output is UTF-8")
        }
        Format::Text => {
            let s = &report.summary;
            let mut t = String::new();
            let _ = writeln!(t, "group {} (rank {}, order {})", s.group, s.rank, s.order);
            let degrees: Vec<String> = s.degrees.iter().map(|d| d.to_string()).collect();
            let _ = writeln!(t, "degrees: {}", degrees.join(", "));
            let _ = writeln!(
                t,
                "longest element: {} (length {})",
                s.longest_element, s.longest_length
            );
            let _ = writeln!(t, "conjugacy classes: {}", report.classes.len());
            let width = report.classes.iter().map(|c| c.representative.len()).max().unwrap_or(0);
            for c in &report.classes {
                let _ = writeln!(
                    t,
                    "  {:>3}  {:<width$}  length {:>2}  size {:>5}  order {:>2}",
                    c.index, c.representative, c.length, c.size, c.element_order
                );
            }
            t
        }
    };
    Ok(ok(text))
}

fn cmd_cells(cli: &Cli, cfg: &PipelineConfig) -> Result<Output> {
    let g = load_group(parse_type(cli)?, cfg)?;
    heavy_guard(cli, &g)?;
    let mut notices = Vec::new();
    let loaded = kl_and_h(&g, cfg, HScope::AllPairs, &mut notices);
    notify(&notices);
    let (_, h) = loaded?;
    let cells = compute_cells(&g, &h);
    let a = compute_a(&g, &h, &cells, cfg.par)?;
    let gamma = compute_gamma(&g, &h, &a)?;
    let d = distinguished_involutions(&g, &cells, &gamma)?;
    let report = cell_report(&g, &cells, Some(&a), Some(&d));
    Ok(ok(match cli.format {
        Format::Json => json(&report)?,
        Format::Csv => report.to_csv()?,
        Format::Text => report.to_text(),
    }))
}

fn cmd_chartable(cli: &Cli, cfg: &PipelineConfig) -> Result<Output> {
    let g = load_group(parse_type(cli)?, cfg)?;
    let tab = character_table(&g, cfg.par)?;
    let report = character_table_report(&tab);
    Ok(ok(match cli.format {
        Format::Json => json(&report)?,
        Format::Csv => report.to_csv()?,
        Format::Text => report.to_text(),
    }))
}

fn cmd_classify(cli: &Cli, cfg: &PipelineConfig) -> Result<Output> {
    let claims = ClaimId::parse_list(&cli.claims)?;
    let g = load_group(parse_type(cli)?, cfg)?;
    heavy_guard(cli, &g)?;
    let start = Instant::now();
    let mut notices = Vec::new();
    let art = build_artifacts(g, cfg, &mut notices);
    notify(&notices);
    let art = art?;
    let cl = classify(&art, cfg.par)?;
    let claims = verify_claims(&claims, &art, &cl);
    let report = classification_report(&art, &cl, claims);
    eprintln!("klcells: classified {} in {:.2?}", art.group.name(), start.elapsed());
    let passed = report.claims.iter().all(|c| c.passed());
    let text = match cli.format {
        Format::Json => json(&report)?,
        Format::Csv => report.to_csv()?,
        Format::Text => report.to_text(),
    };
    Ok(Output { text, passed })
}

#[derive(Serialize)]
struct VerifySuite {
    schema_version: u32,
    all_pass: bool,
    groups: Vec<VerifyReport>,
}

fn cmd_verify(cli: &Cli, cfg: &PipelineConfig) -> Result<Output> {
    let claims = ClaimId::parse_list(&cli.claims)?;
    let types: Vec<CoxeterType> = match &cli.ty {
        Some(_) => vec![parse_type(cli)?],
        None => {
            let mut v: Vec<&str> = DEFAULT_SET.to_vec();
            if cli.heavy {
                v.extend(HEAVY_SET);
            }
            v.iter().map(|s| s.parse()).collect::<Result<_>>()?
        }
    };
    let mut reports = Vec::new();
    for ty in types {
        let g = load_group(ty, cfg)?;
        heavy_guard(cli, &g)?;
        let start = Instant::now();
        let mut notices = Vec::new();
        let art = build_artifacts(g, cfg, &mut notices);
        notify(&notices);
        let art = match art {
            Ok(a) => a,
            // A heavy group that does not fit is skipped in the suite run, not fatal.
            Err(Error::Refused(why)) if cli.ty.is_none() => {
                eprintln!("klcells: skipping {ty}: {why}");
                continue;
            }
            Err(e) => return Err(e),
        };
        let cl = classify(&art, cfg.par)?;
        let results = verify_claims(&claims, &art, &cl);
        for c in &results {
            eprintln!(
                "klcells: {} {} {} ({:.2?})",
                art.group.name(),
                c.claim,
                if c.passed() { "pass" } else { "FAIL" },
                c.elapsed
            );
        }
        eprintln!("klcells: verified {} in {:.2?}", art.group.name(), start.elapsed());
        reports.push(VerifyReport::new(art.group.name(), art.group.order(), results));
    }
    let suite = VerifySuite {
        schema_version: 1,
        all_pass: reports.iter().all(|r| r.all_pass),
        groups: reports,
    };
    let text = match cli.format {
        Format::Json => json(&suite)?,
        Format::Csv => {
            let mut out = String::new();
            for (i, r) in suite.groups.iter().enumerate() {
                let csv = r.to_csv()?;
                let body = if i == 0 {
                    &csv[..]
                } else {
                    csv.split_once('\n').map_or("", |(_, b)| b)
                };
                out.push_str(body);
            }
            out
        }
        Format::Text => {
            let parts: Vec<String> = suite.groups.iter().map(|r| r.to_text()).collect();
            parts.join("\n")
        }
    };
    Ok(Output {
        text,
        passed: suite.all_pass,
    })
}
