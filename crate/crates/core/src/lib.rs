//! Exact generalized Gončarov polynomials for arbitrary sequences of binomial
//! type, their realization as weighted parking-function enumerators over
//! partition lattices and exponential families, and brute-force checks of
//! the identities connecting them.

pub mod cli;
pub mod error;
pub mod expr;
pub mod family;
pub mod goncarov;
pub mod json;
pub mod lattice;
pub mod operator;
pub mod parking;
pub mod poly;
pub mod series;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
pub use goncarov::{Grid, OrderedPartition};
pub use lattice::{PartitionClass, SetPartition};
pub use poly::{FactorialKind, Monomial, MultiPoly, Rational, VarId};
pub use series::TruncatedSeries;
