//! Fraction-free elimination over the integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub(crate) struct Echelon {
    pub rank: usize,
    /// Determinant for square input; zero when rank-deficient.
    pub det: BigInt,
}

/// Bareiss elimination with row pivoting. Columns without a pivot are
/// skipped, which keeps every division exact.
pub(crate) fn eliminate(mut a: Vec<Vec<BigInt>>) -> Echelon {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut negate = false;
    let mut r = 0;
    let mut full = true;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&p| !a[p][c].is_zero()) else {
            full = false;
            continue;
        };
        if p != r {
            a.swap(p, r);
            negate = !negate;
        }
        for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    let det = if rows == cols && full && r == rows {
        if rows == 0 {
            BigInt::one()
        } else if negate {
            -a[rows - 1][cols - 1].clone()
        } else {
            a[rows - 1][cols - 1].clone()
        }
    } else {
        BigInt::zero()
    };
    Echelon { rank: r, det }
}

pub(crate) fn rank(a: Vec<Vec<BigInt>>) -> usize {
    eliminate(a).rank
}

pub(crate) fn det(a: Vec<Vec<BigInt>>) -> BigInt {
    eliminate(a).det
}
