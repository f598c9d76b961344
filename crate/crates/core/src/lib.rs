mod bits;
pub mod bounds;
pub mod cache;
pub mod canon;
pub mod cli;
pub mod constructions;
pub mod doublestar;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod planarity;
pub mod search;

pub use canon::{canonical_form, CanonicalForm};
pub use doublestar::{contains_double_star, is_free, DoubleStarPattern, Witness};
pub use error::{Error, Result};
pub use graph::Graph;
pub use planarity::is_planar;
