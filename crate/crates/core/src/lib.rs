//! Heights, Mahler measures, auxiliary polynomials and explicit bound audits
//! for points and curves of the two-dimensional multiplicative group.

pub mod algebra;
pub mod curves;
pub mod analytic;
pub mod cli;
pub mod bounds;
pub mod error;
pub mod extrapolation;
pub mod heights;
pub mod obstruction;
pub mod parse;
pub mod siegel;

pub use error::{Error, Result};
