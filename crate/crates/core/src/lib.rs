//! Exact computations in finite Coxeter groups and their Hecke algebras:
//! Kazhdan–Lusztig polynomials, the structure constants of the canonical
//! basis, cells, the asymptotic ring J, character tables and fake degrees,
//! and the ordinary/exceptional classification of irreducible
//! representations and involutions built on top of them.

pub mod chartab;
pub mod classify;
pub mod coxeter;
pub mod error;
pub mod exactnum;
pub mod jring;
pub mod klbase;
pub mod par;

pub use error::{Error, Result};
pub use par::Parallelism;
