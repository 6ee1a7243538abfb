//! Cycle index series for combinatorial species and for species carrying an
//! equivariant group action, with exact rational arithmetic throughout.
//!
//! The crate is organized as:
//!
//! - [`algebra`]: rationals, integer partitions, cycle-type combinatorics
//! - [`perm`]: finite permutation groups and their elements
//! - [`series`]: lazy cycle index series with sums, products, plethysm,
//!   restriction, stretching, recursion, and counting-series extraction
//! - [`expand`]: Polya expansion into k color variables
//! - [`gamma`]: group cycle index series with quotients, equivariant
//!   plethysm, and functorial composition
//! - [`library`]: the elementary species and the standard assemblies
//!   (graphs with complementation, digraphs with reversal, trees)
//! - [`oracle`]: a brute-force enumeration engine that cross-checks every
//!   series computation on small label sets

pub mod algebra;
pub mod error;
pub mod expand;
pub mod gamma;
pub mod library;
pub mod oracle;
pub mod perm;
pub mod series;

pub use algebra::{Partition, Rational};
pub use error::{Error, Result};
pub use expand::{expand_symmetric, SymmetricExpansion};
pub use gamma::GroupCycleIndexSeries;
pub use perm::{FiniteGroup, GroupElement};
pub use series::{CycleIndexSeries, OneVariableSeries};
