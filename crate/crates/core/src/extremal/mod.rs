//! Edge-count thresholds for md and their exhaustive verification.

mod census;
mod enumerate;
mod thresholds;

pub use census::{
    verify_f, verify_g, CatalogEntry, MdCatalog, ReportStats, ThresholdKind, ThresholdReport, WitnessSource,
};
pub use enumerate::{enumerate_connected, enumerate_graphs, ENUMERATION_CAP};
pub use thresholds::{f, g, h_nr_edge_count};
