//! Cells, the a-function, γ-constants, distinguished involutions and the
//! asymptotic ring `J`.

mod asymptotic;
mod cells;
mod report;

pub use asymptotic::{compute_a, compute_gamma, distinguished_involutions, AFunction, GammaTable};
pub use cells::{compute_cells, CellPartition};
pub use report::{cell_report, CellReport};
