//! Cyclic shifts of the linear order on `[n]` and the induced Gale orders.

use crate::error::{Error, Result};

use super::KSubset;

fn check_index(x: usize, n: usize) -> Result<()> {
    if x == 0 || x > n {
        Err(Error::IndexOutOfRange { index: x as i64, n })
    } else {
        Ok(())
    }
}

/// Position of `x` in the order `a < a+1 < ... < n < 1 < ... < a-1`, from 0.
pub(crate) fn shifted_rank(n: usize, a: usize, x: usize) -> usize {
    (x + n - a) % n
}

/// `x ≤_a y` in the cyclic shift starting at `a`.
pub fn shifted_leq(n: usize, a: usize, x: usize, y: usize) -> Result<bool> {
    check_index(a, n)?;
    check_index(x, n)?;
    check_index(y, n)?;
    Ok(shifted_rank(n, a, x) <= shifted_rank(n, a, y))
}

/// Elements of `set` sorted increasingly in `≤_a`.
pub(crate) fn sorted_in(a: usize, set: &KSubset) -> Vec<usize> {
    let mut v: Vec<usize> = set.iter().collect();
    v.sort_by_key(|&x| shifted_rank(set.n(), a, x));
    v
}

/// The Gale order `I ≤_a J`: componentwise comparison after sorting both
/// sets increasingly in `≤_a`.
pub fn gale_leq(a: usize, left: &KSubset, right: &KSubset) -> Result<bool> {
    if left.n() != right.n() {
        return Err(Error::GroundSetMismatch { left: left.n(), right: right.n() });
    }
    if left.len() != right.len() {
        return Err(Error::SizeMismatch { left: left.len(), right: right.len() });
    }
    let n = left.n();
    check_index(a, n)?;
    Ok(gale_leq_unchecked(a, left, right))
}

pub(crate) fn gale_leq_unchecked(a: usize, left: &KSubset, right: &KSubset) -> bool {
    let n = left.n();
    sorted_in(a, left)
        .into_iter()
        .zip(sorted_in(a, right))
        .all(|(x, y)| shifted_rank(n, a, x) <= shifted_rank(n, a, y))
}

/// `[a, b]^cyc`: the clockwise run from `a` to `b`, wrapping through `n`.
pub fn cyclic_interval(a: usize, b: usize, n: usize) -> Result<Vec<usize>> {
    check_index(a, n)?;
    check_index(b, n)?;
    let len = shifted_rank(n, a, b) + 1;
    Ok((0..len).map(|step| (a - 1 + step) % n + 1).collect())
}
