//! Finite bounded lattices and their Loewy-theoretic invariants.
//!
//! The crate models intermediate-structure lattices abstractly: a
//! [`lattice::FiniteLattice`] stores the order, cover relation and meet/join
//! tables densely; [`analysis`] computes socle, radical, Loewy series and the
//! property flags; [`families`] generates the standard test families
//! (divisor lattices, chains, cubes, grids, diamonds, subgroup and subspace
//! lattices) deterministically; [`suites`] turns the structure theorems into
//! executable pass/fail suites over single lattices or seeded campaigns;
//! [`format`] and [`dot`] handle the text format and DOT export.

pub mod analysis;
pub mod dot;
pub mod error;
pub mod families;
pub mod format;
pub mod iso;
pub mod lattice;
pub mod suites;

pub use error::{LatticeError, Result};
pub use lattice::FiniteLattice;
