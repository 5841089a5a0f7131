//! Contact statistics of lattice paths between two boundaries.
//!
//! The crate counts paths and nested tuples of paths in a region by how often
//! they touch the boundaries, and implements the bijections showing that
//! these counts are symmetric: a swap involution on single paths, its
//! extension to tuples, activity-preserving bijections of lattice path
//! matroids, a jeu-de-taquin style map from tuples to flagged tableaux, and
//! applications to permutations, watermelons and k-triangulations.

pub mod applications;
pub mod enumerate;
pub mod error;
pub mod ktuple;
pub mod matroid;
pub mod numeric;
pub mod path;
pub mod poly;
pub mod swap;
pub mod tableau;
pub mod triangulation;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use ktuple::PathTuple;
pub use path::{ContactStats, Path, Region};
pub use poly::MultiPoly;
pub use tableau::Tableau;
pub use word::ContactWord;
