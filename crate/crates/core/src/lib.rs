//! Chromatic symmetric functions of incomparability graphs, expanded in the
//! elementary and Schur bases, together with the tableau combinatorics that
//! computes those expansions: P-tableaux, special rim hook tabloids, inverse
//! Kostka numbers, and acyclic orientations counted by sinks.
//!
//! All arithmetic is exact. The [`verify`] module runs every identity
//! exhaustively over small posets and graphs.

pub mod csf;
pub mod error;
pub mod linalg;
pub mod orderstruct;
pub mod partitions;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use orderstruct::{Graph, Orientation, Poset};
pub use partitions::{partitions_of, Cell, Partition};
pub use symfunc::{Basis, SymFunc};
