//! Permutation groups and symmetric graphs.
//!
//! `cosgraph-core` builds stabilizer chains for permutation groups, constructs
//! coset graphs `Cos(G, H, g)` and Cayley graphs, tests Cayley normality via a
//! partition-refinement automorphism search, forms normal quotients, and
//! replays the catalog of valency-13 examples and order tables. It needs only
//! `alloc`; file formats and the command line live in the `cosgraph` crate.

#![no_std]

extern crate alloc;

pub mod catalog;
pub mod construct;
pub mod count;
pub mod error;
pub mod graph;
pub mod group;
pub mod perm;

pub use count::BigCount;
pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use group::{GeneratedGroup, StabilizerChain};
pub use perm::{Permutation, Point};
