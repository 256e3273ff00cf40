//! Reflection symmetry for objects of type `(m, 2m)`.
//!
//! With `i' = 2m + 1 − i`, each predicate checks one of the four equivalent
//! combinatorial characterizations literally; indices are read mod `2m`.

use crate::error::{Error, Result};

use super::{BoundedAffinePermutation, DualGrassmannNecklace, GrassmannNecklace, Positroid};

fn check_half_type(k: usize, n: usize) -> Result<()> {
    if !n.is_multiple_of(2) {
        return Err(Error::OddGroundSet(n));
    }
    if 2 * k != n {
        return Err(Error::NotHalfType { k, n });
    }
    Ok(())
}

/// `i' = n + 1 − i` on a boundary of even size `n`.
pub fn mirror(n: usize, i: usize) -> usize {
    n + 1 - i
}

/// `f(a) = b` implies `f(n + 1 − a) = 2n + 1 − b` (with `n = 2m`).
pub fn is_symmetric_bap(f: &BoundedAffinePermutation) -> Result<bool> {
    let n = f.n();
    check_half_type(f.k(), n)?;
    Ok((1..=n).all(|a| f.eval(mirror(n, a) as i64) == (2 * n + 1) as i64 - f.eval(a as i64)))
}

/// `I ∈ M` if and only if `R(I) ∈ M`.
pub fn is_symmetric_positroid(m: &Positroid) -> Result<bool> {
    check_half_type(m.k(), m.n())?;
    for member in m.members() {
        if !m.contains(&member.reflect()?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `R(I_i) = I_{i'+1}` for all `i`.
pub fn is_symmetric_necklace(necklace: &GrassmannNecklace) -> Result<bool> {
    let n = necklace.n();
    check_half_type(necklace.k(), n)?;
    for i in 1..=n {
        if necklace.term(i).reflect()? != *necklace.term(mirror(n, i) + 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `R(J_i) = J_{i'+1}` for all `i`.
pub fn is_symmetric_dual_necklace(necklace: &DualGrassmannNecklace) -> Result<bool> {
    let n = necklace.n();
    check_half_type(necklace.k(), n)?;
    for i in 1..=n {
        if necklace.term(i).reflect()? != *necklace.term(mirror(n, i) + 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::KSubset;

    #[test]
    fn shift_by_half_is_symmetric() {
        for m in 1..=4 {
            let n = 2 * m;
            let f = BoundedAffinePermutation::new((1..=n as i64).map(|i| i + m as i64).collect(), n).unwrap();
            assert!(is_symmetric_bap(&f).unwrap());
        }
    }

    #[test]
    fn full_collection_is_symmetric() {
        let p = Positroid::new(6, 3, KSubset::all(6, 3)).unwrap();
        assert!(is_symmetric_positroid(&p).unwrap());
    }

    #[test]
    fn wrong_type_is_an_error() {
        let f = BoundedAffinePermutation::new(vec![2, 3, 4, 5], 4).unwrap();
        assert!(matches!(is_symmetric_bap(&f), Err(Error::NotHalfType { k: 1, n: 4 })));
        let odd = BoundedAffinePermutation::new(vec![2, 3, 4], 3).unwrap();
        assert!(matches!(is_symmetric_bap(&odd), Err(Error::OddGroundSet(3))));
    }

    #[test]
    fn mirrored_fixed_points_have_opposite_colours() {
        for m in 1..=3 {
            for f in BoundedAffinePermutation::enumerate(m, 2 * m) {
                if is_symmetric_bap(&f).unwrap() {
                    for a in 1..=2 * m {
                        assert_eq!(f.is_white_fixed(a), f.is_black_fixed(mirror(2 * m, a)));
                    }
                }
            }
        }
    }

    #[test]
    fn symmetric_necklaces_complement_across_the_mirror() {
        // a ∈ I_i exactly when a' ∉ I_{i'+1}
        for m in 1..=3 {
            let n = 2 * m;
            for f in BoundedAffinePermutation::enumerate(m, n) {
                let nk = GrassmannNecklace::from_bap(&f);
                if !is_symmetric_necklace(&nk).unwrap() {
                    continue;
                }
                for i in 1..=n {
                    for a in 1..=n {
                        assert_eq!(nk.term(i).contains(a), !nk.term(mirror(n, i) + 1).contains(mirror(n, a)));
                    }
                }
            }
        }
    }
}
