//! Matroidal Latin squares and their independent partial transversals.
//!
//! A matroidal Latin square of degree `n` is an n×n grid of matroid elements
//! in which every row and every column is a base. This crate provides
//!
//! * exact rank, span and support oracles for linear matroids over GF(p) and
//!   for partition matroids ([`matroid`]),
//! * grid construction, validation and generators ([`mls`], [`latin`]),
//! * solvers for independent partial transversals: greedy, the exchange step
//!   that reaches `⌈2n/3⌉`, and exact branch and bound ([`transversal`]),
//! * the covered-subset search on set families ([`lemma1`]),
//! * instance files and conjecture scans ([`harness`]).
//!
//! Cells are zero-based `(row, column)` pairs throughout.

pub mod error;
pub mod field;
pub mod harness;
pub mod latin;
pub mod lemma1;
pub mod matroid;
pub mod mls;
pub mod transversal;

pub use error::{Error, ErrorKind, Result};
pub use field::FieldSpec;
pub use latin::LatinSquare;
pub use matroid::{ElementId, LinearMatroid, Matroid, PartitionMatroid};
pub use mls::{BlockView, Cell, Mls, Region, Violation};
pub use transversal::{
    augment_step, exact_max, greedy_maximal, is_valid_transversal, two_thirds_solve, Method,
    SolveReport, Transversal,
};
