//! Finite Coxeter groups: types, enumeration, Bruhat order, classes,
//! degrees.

mod bruhat;
mod classes;
mod datum;
mod degrees;
mod group;

pub use bruhat::{bruhat_leq, BruhatOrder};
pub use classes::{conjugacy_classes, ConjugacyClass, ConjugacyClasses};
pub use datum::{CoxeterDatum, CoxeterType};
pub use degrees::compute_degrees;
pub use group::{build_group, known_order, render_word, Elem, GroupSummary, GroupTable, DEFAULT_MAX_ORDER};
