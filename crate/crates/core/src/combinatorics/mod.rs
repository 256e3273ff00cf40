//! Cyclic orders, k-subsets, bounded affine permutations, Grassmann
//! necklaces, positroids and the reflection symmetry among them.

mod bap;
mod necklace;
mod order;
mod positroid;
mod subset;
pub mod symmetry;

pub use bap::BoundedAffinePermutation;
pub use necklace::{DualGrassmannNecklace, GrassmannNecklace};
pub use order::{cyclic_interval, gale_leq, shifted_leq};
pub use positroid::Positroid;
pub use subset::KSubset;
pub use symmetry::{
    is_symmetric_bap, is_symmetric_dual_necklace, is_symmetric_necklace, is_symmetric_positroid, mirror,
};
