//! Defining equations and coordinate rings of tangential varieties of
//! Segre–Veronese varieties, in exact arithmetic.
//!
//! Runnable tours live in `examples/`:
//!
//! ```text
//! cargo run --release --example coordinate_ring
//! cargo run --release --example hyperdeterminant
//! cargo run --release --example twisted_cubic
//! cargo run --release --example tabloid_calculus
//! cargo run --release --example characters
//! cargo run --release --example generator_catalog
//! cargo run --release --example graph_dsl
//! cargo run --release --example oracle_agreement
//! ```

pub mod error;
pub mod exactalg;
pub mod symfun;
pub mod generic;
pub mod graphs;
pub mod tangent;
pub mod cli;

pub use error::{Error, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
