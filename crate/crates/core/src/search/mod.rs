//! Exact search for planar Turán numbers and the supporting enumerators.

mod exact;
mod naive;
pub mod orderly;
mod triangulations;

pub use exact::{exact_planar_turan, ExactResult, SearchConfig, DEFAULT_EXTREMAL_CAP};
pub use naive::{naive_exact, NAIVE_MAX_VERTICES};
pub use orderly::enumerate_hereditary;
pub use triangulations::{enumerate_maximal_planar, TRIANGULATION_MAX_VERTICES};
