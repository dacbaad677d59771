//! Colored graphs as two-row tabloids, their classification, and the
//! generator catalogs.

mod catalog;
mod dsl;
mod graph;

pub use catalog::*;
pub use dsl::*;
pub use graph::*;
