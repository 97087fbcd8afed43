use std::path::PathBuf;

use crate::chartab::{character_table, CharacterTable};
use crate::coxeter::{build_group, CoxeterDatum, CoxeterType, Elem, GroupTable, DEFAULT_MAX_ORDER};
use crate::error::{Error, Result};
use crate::jring::{
    compute_a, compute_cells, compute_gamma, distinguished_involutions, AFunction, CellPartition, GammaTable,
};
use crate::klbase::{
    cache_load, cache_save, check_h_budget, compute_dagger, compute_h_table, compute_kl, group_cache_dir, DaggerBasis,
    HScope, HTable, KLStore, DEFAULT_H_BUDGET,
};
use crate::par::Parallelism;

use super::phi::{build_phi, PhiIso};

/// Knobs shared by every stage.
#[derive(Clone, Debug)]
pub struct PipelineConfig {
    pub cache_dir: Option<PathBuf>,
    pub par: Parallelism,
    pub max_order: usize,
    pub h_budget: usize,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            cache_dir: None,
            par: Parallelism::default(),
            max_order: DEFAULT_MAX_ORDER,
            h_budget: DEFAULT_H_BUDGET,
        }
    }
}

pub fn load_group(ty: CoxeterType, cfg: &PipelineConfig) -> Result<GroupTable> {
    build_group(&CoxeterDatum::new(ty), cfg.max_order)
}

/// KL polynomials and an h-table covering at least `scope`, through the
/// cache when one is configured. Cache events are appended to `notices`.
pub fn kl_and_h(
    g: &GroupTable,
    cfg: &PipelineConfig,
    scope: HScope,
    notices: &mut Vec<String>,
) -> Result<(KLStore, HTable)> {
    check_h_budget(g, scope, cfg.h_budget)?;
    let dir = cfg.cache_dir.as_ref().map(|root| group_cache_dir(root, g));
    let mut kl = None;
    if let Some(dir) = &dir {
        match cache_load(dir, g) {
            Ok((k, h)) => {
                if let Some(h) = h.filter(|h| covers(h.scope(), scope)) {
                    notices.push(format!("loaded {} from cache {}", g.name(), dir.display()));
                    return Ok((k, h));
                }
                kl = Some(k);
            }
            Err(Error::CacheInvalid(why)) => {
                if dir.join("manifest.json").exists() {
                    notices.push(format!("discarding cache for {}: {why}", g.name()));
                }
            }
            Err(e) => return Err(e),
        }
    }
    let kl = match kl {
        Some(k) => k,
        None => compute_kl(g),
    };
    let h = compute_h_table(g, &kl, scope, cfg.par, cfg.h_budget)?;
    if let Some(dir) = &dir {
        cache_save(dir, g, &kl, Some(&h))?;
        notices.push(format!("wrote cache {}", dir.display()));
    }
    Ok((kl, h))
}

fn covers(have: HScope, need: HScope) -> bool {
    have == HScope::AllPairs || need == HScope::Generators
}

/// Every computed object needed by the classification and the claims.
#[derive(Debug)]
pub struct Artifacts {
    pub group: GroupTable,
    pub kl: KLStore,
    pub h: HTable,
    pub cells: CellPartition,
    pub a: AFunction,
    pub gamma: GammaTable,
    pub distinguished: Vec<Elem>,
    pub dagger: DaggerBasis,
    pub table: CharacterTable,
    pub phi: PhiIso,
}

pub fn build_artifacts(g: GroupTable, cfg: &PipelineConfig, notices: &mut Vec<String>) -> Result<Artifacts> {
    let (kl, h) = kl_and_h(&g, cfg, HScope::AllPairs, notices)?;
    let cells = compute_cells(&g, &h);
    let a = compute_a(&g, &h, &cells, cfg.par)?;
    let gamma = compute_gamma(&g, &h, &a)?;
    let distinguished = distinguished_involutions(&g, &cells, &gamma)?;
    let dagger = compute_dagger(&g, &kl);
    let table = character_table(&g, cfg.par)?;
    let phi = build_phi(&g, &h, &distinguished, &cells, &dagger, &table)?;
    Ok(Artifacts {
        group: g,
        kl,
        h,
        cells,
        a,
        gamma,
        distinguished,
        dagger,
        table,
        phi,
    })
}
