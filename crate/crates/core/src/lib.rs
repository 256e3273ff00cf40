//! Exact combinatorics of plabic graphs and positroid cells in the totally
//! nonnegative Grassmannian, with the reflection-symmetric variants.
//!
//! The crate is organised bottom-up:
//!
//! * [`combinatorics`]: cyclic orders, k-subsets, bounded affine permutations,
//!   Grassmann necklaces, positroids and the reflection map `R`.
//! * [`linalg`]: exact rational matrices, minors, rank and the column action
//!   of bridges.
//! * [`graph`]: plabic graphs with a rotation-system embedding, trips,
//!   reducedness, reflection and bridge insertion.
//! * [`measurement`]: the matching-based boundary measurement map, gauge
//!   transformations and symmetric normal forms.
//! * [`bridge`]: bridge removal, general and symmetric bridge decompositions,
//!   and realization of bridge scripts as weighted graphs.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod bridge;
pub mod combinatorics;
mod error;
pub mod gallery;
pub mod graph;
pub mod linalg;
pub mod measurement;
mod plucker;
pub mod rational;

pub use bridge::{BridgeMove, BridgeScript, DecompositionTrace, RemovalStep};
pub use combinatorics::{
    BoundedAffinePermutation, DualGrassmannNecklace, GrassmannNecklace, KSubset, Positroid,
};
pub use error::{Error, ErrorClass, Result};
pub use graph::{Color, EdgeId, PlabicGraph, Trip, VertexId};
pub use linalg::RationalMatrix;
pub use measurement::WeightedPlabicGraph;
pub use plucker::PluckerVector;
pub use rational::Rational;
