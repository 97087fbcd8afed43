//! Exact character tables (Dixon–Schneider) and class-function arithmetic.

mod dixon;
mod modp;
mod report;
mod table;

pub use dixon::character_table;
pub use report::{character_table_report, CharacterTableReport, ClassEntry, IrrepEntry};
pub use table::{CharacterTable, ClassFunction};
