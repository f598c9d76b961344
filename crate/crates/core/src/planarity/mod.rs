//! Planarity decision: a linear-time left-right tester for production use and
//! an exhaustive Kuratowski-subdivision oracle for cross-validation.

mod lr;
mod oracle;

pub use lr::is_planar;
pub use oracle::{is_planar_oracle, ORACLE_MAX_VERTICES};
