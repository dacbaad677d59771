//! The concrete side: tangent points, the matrices of π_a in monomial bases,
//! I_r as their joint kernel, and an evaluation oracle that knows nothing about π.

mod concrete;
mod oracle;
mod report;
mod space;

pub use concrete::*;
pub use oracle::*;
pub use report::*;
pub use space::*;
