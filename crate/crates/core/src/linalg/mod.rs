//! Exact rational matrices: minors, Plücker vectors, total nonnegativity,
//! recovery of the bounded affine permutation and column operations.

mod bareiss;
mod matrix;

pub use matrix::RationalMatrix;
