//! Bridge removal and bridge decompositions of totally nonnegative points,
//! with the mirror-invariant variant for symmetric points.

mod script;
mod symmetric;

pub use script::{BridgeMove, BridgeScript};
pub use symmetric::{
    sym_decompose, sym_decompose_traced, sym_remove_center, sym_remove_pair, symmetric_graph_from_bap,
};

use crate::combinatorics::{BoundedAffinePermutation, GrassmannNecklace, KSubset};
use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::rational::{self, Rational};

/// `(−1)^w` where `w` counts white fixed points of `f` strictly between
/// `left` and `right`.
pub(crate) fn bridge_sign(f: &BoundedAffinePermutation, left: usize, right: usize) -> Rational {
    let whites = ((left + 1)..right).filter(|&p| f.is_white_fixed(p)).count();
    rational::int(if whites % 2 == 0 { 1 } else { -1 })
}

/// One bridge removal `X ↦ X*`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RemovalStep {
    pub left: usize,
    pub right: usize,
    /// The removed weight `c > 0`.
    pub weight: Rational,
    /// `bap(X)`.
    pub before: BoundedAffinePermutation,
    /// `bap(X) · (left right)`.
    pub expected: BoundedAffinePermutation,
    /// `bap(X*)` computed from the matrix.
    pub observed: BoundedAffinePermutation,
}

impl RemovalStep {
    pub fn is_consistent(&self) -> bool {
        rational::is_positive(&self.weight) && self.expected == self.observed
    }
}

/// Every removal performed by a decomposition, the matrix left at the end
/// and the script that rebuilds the input.
#[derive(Clone, Debug)]
pub struct DecompositionTrace {
    pub steps: Vec<RemovalStep>,
    pub residual: RationalMatrix,
    pub script: BridgeScript,
}

/// `Δ_I / Δ_{(I ∪ {left}) − {right}}` with `I` the necklace term at `right`.
fn bridge_ratio(x: &RationalMatrix, f: &BoundedAffinePermutation, left: usize, right: usize) -> Result<Rational> {
    let necklace = GrassmannNecklace::from_bap(f);
    let top: &KSubset = necklace.term(right);
    let bottom = top.exchange(right, left);
    let den = x.minor(&bottom)?;
    if den == rational::int(0) {
        return Err(Error::ZeroDenominator { left, right });
    }
    let c = x.minor(top)? / den;
    if !rational::is_positive(&c) {
        return Err(Error::NonPositiveRatio(rational::format(&c)));
    }
    Ok(c)
}

fn remove_with(x: &RationalMatrix, f: &BoundedAffinePermutation, left: usize, right: usize) -> Result<(RationalMatrix, RemovalStep)> {
    if !f.has_bridge_between(left, right)? {
        return Err(Error::NoBridge { left, right });
    }
    let c = bridge_ratio(x, f, left, right)?;
    let shift = -(bridge_sign(f, left, right) * &c);
    let reduced = x.add_column_multiple(left, right, &shift)?;
    let step = RemovalStep {
        left,
        right,
        weight: c,
        before: f.clone(),
        expected: f.multiply_transposition(left, right)?,
        observed: reduced.bap()?,
    };
    Ok((reduced, step))
}

/// Removes the bridge between `left < right` (all positions between fixed).
pub fn remove_bridge_between(x: &RationalMatrix, left: usize, right: usize) -> Result<(RationalMatrix, RemovalStep)> {
    remove_with(x, &x.bap()?, left, right)
}

/// Removes the bridge at `(i, i + 1)`: `X* = X · x_i(−c)`.
pub fn remove_bridge(x: &RationalMatrix, i: usize) -> Result<(RationalMatrix, RemovalStep)> {
    if i == 0 || i >= x.n() {
        return Err(Error::IndexOutOfRange { index: i as i64, n: x.n() });
    }
    remove_bridge_between(x, i, i + 1)
}

fn require_tnn(x: &RationalMatrix) -> Result<()> {
    if x.rank() != x.k() {
        return Err(Error::RankDeficient);
    }
    if !x.is_tnn()? {
        return Err(Error::NotTotallyNonnegative);
    }
    Ok(())
}

/// Repeatedly removes the first bridge between consecutive non-fixed
/// positions until only lollipops remain.
pub fn decompose_traced(x: &RationalMatrix) -> Result<DecompositionTrace> {
    require_tnn(x)?;
    let mut current = x.clone();
    let mut steps = Vec::new();
    loop {
        let f = current.bap()?;
        if f.is_all_fixed() {
            let moves = steps
                .iter()
                .rev()
                .map(|s: &RemovalStep| script::BridgeMove::Single { left: s.left, right: s.right, weight: s.weight.clone() })
                .collect();
            let script = BridgeScript::new(f.white_fixed_points(), moves)?;
            return Ok(DecompositionTrace { steps, residual: current, script });
        }
        let (left, right) = *f.removable_bridges().first().ok_or(Error::NoBridge { left: 0, right: 0 })?;
        let (next, step) = remove_with(&current, &f, left, right)?;
        steps.push(step);
        current = next;
    }
}

pub fn decompose(x: &RationalMatrix) -> Result<BridgeScript> {
    Ok(decompose_traced(x)?.script)
}
