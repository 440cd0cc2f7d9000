//! Automorphism groups, canonical certificates, and isomorphism testing for
//! small vertex-colored graphs.
//!
//! The engine is exact: group orders come from verified generators fed
//! through Schreier-Sims, certificates from a canonical labeling search, and
//! every isomorphism witness is checked edge by edge before it is returned.

mod brute;
mod canon;
mod graph;
mod perm;
mod refine;
mod schreier;

pub use brute::{brute_force_aut_order, BRUTE_FORCE_CAP};
pub use canon::{analyze, is_isomorphic, AutomorphismReport};
pub use graph::{ColoredGraph, MAX_VERTICES};
pub use perm::Permutation;
pub use schreier::group_order_from_generators;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("graph has {0} vertices, exceeding the cap of {1}")]
    TooManyVertices(usize, usize),
}
