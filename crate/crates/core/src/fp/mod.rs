//! Exact linear algebra over GF(p) and sigma-module decomposition.

pub mod matrix;
pub mod module;

pub use matrix::{Echelon, GfpMatrix};
pub use module::{ModuleMultiset, SigmaModule};
