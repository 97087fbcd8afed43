//! Transport of irreducible characters to `J` and to the Hecke algebra,
//! the ordinary/exceptional dichotomy for irreducibles and involutions,
//! fake degrees, special representations, left cell modules, and the
//! claim checks built on all of these.

mod cellmod;
mod claims;
mod fake;
mod hecke;
mod phi;
mod pipeline;
mod records;
mod report;

pub use cellmod::{detect_orientation, left_cell_module, raw_cell_character, Orientation};
pub use claims::{verify_claim, verify_claims, ClaimId, ClaimReport, Status};
pub use fake::{fake_degree, reflection_charpolys, CPoly};
pub use hecke::{hecke_character, is_ordinary, CycloPoly};
pub use phi::{build_phi, PhiIso};
pub use pipeline::{build_artifacts, kl_and_h, load_group, Artifacts, PipelineConfig};
pub use records::{
    classify, classify_involutions, expected_exceptional_profile, special_flag, CellRecord, CheckRecord,
    Classification, InvolutionRecord, IrrepRecord,
};
pub use report::{classification_report, CellEntry, ClassificationReport, IrrepEntry, LeftCellEntry, VerifyReport};
