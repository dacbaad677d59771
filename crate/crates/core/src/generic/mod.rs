//! Generic algebra: labeled blocks, the map π, tabloids and their covariants.

mod block;
mod covariant;
mod tabloid;

pub use block::*;
pub use covariant::*;
pub use tabloid::*;
