//! galdet: exact computations with T-groups (pro-p-groups with a maximal
//! closed subgroup that is elementary abelian) and the cohomological
//! obstructions that rule groups out as absolute Galois groups.
//!
//! The crate is organized around the objects it computes with:
//!
//! - [`fp`]: exact linear algebra over GF(p) and decomposition of modules
//!   over a cyclic group of order p into Jordan blocks M_1..M_p.
//! - [`words`]: free-group words, presentations, and the Reidemeister-
//!   Schreier construction of a T-group from a presentation with an
//!   index-p augmentation.
//! - [`tgroup`]: T-group arithmetic, the invariants (t_1..t_p, u), and
//!   canonical constructions.
//! - [`detector`]: the decision procedures (realizability as T_{E/F},
//!   relator-shape tests, the degree-2 summand criterion).
//! - [`spectral`]: E_2 pages and differentials for the two central
//!   extension families Omega_1 and Omega_2, and their H^1/H^2.
//! - [`oracle`]: brute-force census and isomorphism search at tiny sizes,
//!   used to certify the invariant-based classification independently.
//! - [`cli`]: the command-line surface with its structured report format.
//!
//! All arithmetic is exact; there are no tolerances anywhere.

pub mod cli;
pub mod detector;
pub mod error;
pub mod fp;
pub mod oracle;
pub mod parallel;
pub mod report;
pub mod spectral;
pub mod tgroup;
pub mod words;

pub use error::{Error, Result};
