//! Kazhdan–Lusztig polynomials, the C′-basis and its structure constants,
//! the involution `†`, and the persistent cache.

mod cache;
mod dagger;
mod hecke;
mod htable;
mod kl;

pub use cache::{
    cache_load, cache_save, decode_h, decode_kl, encode_h, encode_kl, group_cache_dir, read_manifest, Manifest,
    CACHE_FORMAT_VERSION,
};
pub use dagger::{apply_dagger, compute_dagger, dagger_gen_left, dagger_t_basis, DaggerBasis};
pub use hecke::{c_in_t, c_product, t_basis, t_left_elem, t_left_gen, t_product, t_to_c, t_zero, CVec, TVec};
pub use htable::{check_h_budget, compute_h_table, generator_row, h_column, HScope, HTable, DEFAULT_H_BUDGET};
pub use kl::{compute_kl, KLStore};
