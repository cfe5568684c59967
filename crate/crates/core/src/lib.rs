//! Arc-disjoint out-/in-branchings ("good pairs") and strong arc
//! decompositions in small directed multigraphs, with a catalog of the
//! exceptional digraphs of the semicomplete split case analysis and the
//! constructive lifts that produce their good pairs.

pub mod branchings;
pub mod catalog;
pub mod connectivity;
pub mod constructions;
pub mod digraph;
mod error;
pub mod limits;
pub mod verify;

pub use error::{Error, Result};
