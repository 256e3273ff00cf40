//! Grassmann necklaces, dual Grassmann necklaces and their bijections with
//! bounded affine permutations. All indices are taken modulo `n`.

use std::fmt;

use crate::error::{Error, Result};

use super::order::shifted_rank;
use super::{BoundedAffinePermutation, KSubset};

fn check_terms(n: usize, terms: &[KSubset]) -> Result<usize> {
    if n == 0 || terms.len() != n {
        return Err(Error::WindowLength { expected: n, found: terms.len() });
    }
    let k = terms[0].len();
    for t in terms {
        if t.n() != n {
            return Err(Error::GroundSetMismatch { left: n, right: t.n() });
        }
        if t.len() != k {
            return Err(Error::SizeMismatch { left: k, right: t.len() });
        }
    }
    Ok(k)
}

/// `(I_1, ..., I_n)`: if `i ∈ I_i` then `I_{i+1} = (I_i ∪ {j}) − {i}`,
/// otherwise `I_{i+1} = I_i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GrassmannNecklace {
    n: usize,
    k: usize,
    terms: Vec<KSubset>,
}

impl GrassmannNecklace {
    pub fn new(n: usize, terms: Vec<KSubset>) -> Result<Self> {
        let k = check_terms(n, &terms)?;
        for i in 1..=n {
            let (cur, next) = (&terms[i - 1], &terms[i % n]);
            let ok = if cur.contains(i) {
                cur.iter().filter(|&x| x != i).all(|x| next.contains(x))
            } else {
                cur == next
            };
            if !ok {
                return Err(Error::MalformedNecklace { position: i });
            }
        }
        Ok(GrassmannNecklace { n, k, terms })
    }

    /// `I_a` is the set of `a`-anti-exceedances: `f̄⁻¹(i) >_a i`, or `i` a
    /// white fixed point.
    pub fn from_bap(f: &BoundedAffinePermutation) -> Self {
        let n = f.n();
        let terms = (1..=n)
            .map(|a| {
                let elems = (1..=n)
                    .filter(|&i| {
                        f.is_white_fixed(i) || shifted_rank(n, a, f.bar_inverse(i)) > shifted_rank(n, a, i)
                    })
                    .collect();
                KSubset::from_sorted_unchecked(n, elems)
            })
            .collect();
        GrassmannNecklace { n, k: f.k(), terms }
    }

    /// Inverse of [`Self::from_bap`]: a moving element gives `f̄(i) = j`,
    /// a stationary step gives a black (`i ∉ I_i`) or white fixed point.
    pub fn to_bap(&self) -> Result<BoundedAffinePermutation> {
        let n = self.n;
        let mut bar = vec![0usize; n];
        let mut white = vec![false; n];
        for i in 1..=n {
            let (cur, next) = (self.term(i), self.term(i + 1));
            if cur == next {
                bar[i - 1] = i;
                white[i - 1] = cur.contains(i);
            } else {
                let incoming: Vec<usize> = next.iter().filter(|&x| !cur.contains(x)).collect();
                match incoming.as_slice() {
                    [j] if cur.contains(i) => bar[i - 1] = *j,
                    _ => return Err(Error::MalformedNecklace { position: i }),
                }
            }
        }
        BoundedAffinePermutation::from_bar(&bar, |i| white[i - 1])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &[KSubset] {
        &self.terms
    }

    /// `I_i` with the index read modulo `n` (so `term(n + 1) == term(1)`).
    pub fn term(&self, i: usize) -> &KSubset {
        &self.terms[(i + self.n - 1) % self.n]
    }

    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let terms = parse_terms(n, text)?;
        Self::new(n, terms)
    }
}

/// `(J_1, ..., J_n)`: if `i ∈ J_{i+1}` then `J_i = (J_{i+1} ∪ {j}) − {i}`,
/// otherwise `J_i = J_{i+1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DualGrassmannNecklace {
    n: usize,
    k: usize,
    terms: Vec<KSubset>,
}

impl DualGrassmannNecklace {
    pub fn new(n: usize, terms: Vec<KSubset>) -> Result<Self> {
        let k = check_terms(n, &terms)?;
        for i in 1..=n {
            let (cur, next) = (&terms[i - 1], &terms[i % n]);
            let ok = if next.contains(i) {
                next.iter().filter(|&x| x != i).all(|x| cur.contains(x))
            } else {
                cur == next
            };
            if !ok {
                return Err(Error::MalformedDualNecklace { position: i });
            }
        }
        Ok(DualGrassmannNecklace { n, k, terms })
    }

    /// `J_a = { i : f̄(i) <_a i }` together with the white fixed points.
    pub fn from_bap(f: &BoundedAffinePermutation) -> Self {
        let n = f.n();
        let terms = (1..=n)
            .map(|a| {
                let elems = (1..=n)
                    .filter(|&i| f.is_white_fixed(i) || shifted_rank(n, a, f.bar(i)) < shifted_rank(n, a, i))
                    .collect();
                KSubset::from_sorted_unchecked(n, elems)
            })
            .collect();
        DualGrassmannNecklace { n, k: f.k(), terms }
    }

    pub fn to_bap(&self) -> Result<BoundedAffinePermutation> {
        let n = self.n;
        let mut bar = vec![0usize; n];
        let mut white = vec![false; n];
        for i in 1..=n {
            let (cur, next) = (self.term(i), self.term(i + 1));
            if cur == next {
                bar[i - 1] = i;
                white[i - 1] = next.contains(i);
            } else {
                let incoming: Vec<usize> = cur.iter().filter(|&x| !next.contains(x)).collect();
                match incoming.as_slice() {
                    // f̄⁻¹(i) = j
                    [j] if next.contains(i) => bar[*j - 1] = i,
                    _ => return Err(Error::MalformedDualNecklace { position: i }),
                }
            }
        }
        if bar.contains(&0) {
            return Err(Error::MalformedDualNecklace { position: bar.iter().position(|&b| b == 0).unwrap() + 1 });
        }
        BoundedAffinePermutation::from_bar(&bar, |i| white[i - 1])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &[KSubset] {
        &self.terms
    }

    pub fn term(&self, i: usize) -> &KSubset {
        &self.terms[(i + self.n - 1) % self.n]
    }

    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let terms = parse_terms(n, text)?;
        Self::new(n, terms)
    }
}

fn parse_terms(n: usize, text: &str) -> Result<Vec<KSubset>> {
    text.split(';').map(|part| KSubset::parse(n, part)).collect()
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[KSubset]) -> fmt::Result {
    let parts: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
    write!(f, "{}", parts.join(";"))
}

impl fmt::Display for GrassmannNecklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms)
    }
}

impl fmt::Debug for GrassmannNecklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Necklace[{self}]")
    }
}

impl fmt::Display for DualGrassmannNecklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms)
    }
}

impl fmt::Debug for DualGrassmannNecklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DualNecklace[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, xs: &[usize]) -> KSubset {
        KSubset::new(n, xs.iter().copied()).unwrap()
    }

    fn bap(w: &[i64]) -> BoundedAffinePermutation {
        BoundedAffinePermutation::new(w.to_vec(), w.len()).unwrap()
    }

    /// Brute force of the anti-exceedance definition, written independently
    /// of `shifted_rank`.
    fn anti_exceedances(f: &BoundedAffinePermutation, a: usize) -> Vec<usize> {
        let n = f.n();
        let order: Vec<usize> = (0..n).map(|s| (a - 1 + s) % n + 1).collect();
        let pos = |x: usize| order.iter().position(|&y| y == x).unwrap();
        (1..=n)
            .filter(|&i| {
                let pre = (1..=n).find(|&p| f.bar(p) == i).unwrap();
                f.eval(i as i64) == (i + n) as i64 || pos(pre) > pos(i)
            })
            .collect()
    }

    #[test]
    fn necklace_of_top_cell() {
        let nk = GrassmannNecklace::from_bap(&bap(&[3, 4, 5, 6]));
        let expected = vec![set(4, &[1, 2]), set(4, &[2, 3]), set(4, &[3, 4]), set(4, &[1, 4])];
        assert_eq!(nk.terms(), expected.as_slice());
        for a in 1..=4 {
            assert_eq!(nk.term(a).elements(), anti_exceedances(&bap(&[3, 4, 5, 6]), a).as_slice());
        }
        assert_eq!(nk.to_bap().unwrap(), bap(&[3, 4, 5, 6]));
    }

    #[test]
    fn all_fixed_points() {
        let white = GrassmannNecklace::from_bap(&bap(&[3, 4]));
        assert!(white.terms().iter().all(|t| *t == set(2, &[1, 2])));
        let black = GrassmannNecklace::from_bap(&bap(&[1, 2]));
        assert!(black.terms().iter().all(|t| t.is_empty()));
        assert_eq!(black.to_bap().unwrap(), bap(&[1, 2]));
        assert_eq!(white.to_bap().unwrap(), bap(&[3, 4]));
    }

    #[test]
    fn anti_exceedance_brute_force_matches() {
        for n in 1..=5 {
            for f in BoundedAffinePermutation::enumerate_all(n) {
                let nk = GrassmannNecklace::from_bap(&f);
                for a in 1..=n {
                    assert_eq!(nk.term(a).elements(), anti_exceedances(&f, a).as_slice());
                }
            }
        }
    }

    #[test]
    fn round_trips_exhaustively() {
        for n in 1..=6 {
            for f in BoundedAffinePermutation::enumerate_all(n) {
                let nk = GrassmannNecklace::from_bap(&f);
                assert!(GrassmannNecklace::new(n, nk.terms().to_vec()).is_ok(), "{f:?}");
                assert_eq!(nk.to_bap().unwrap(), f);
                let dual = DualGrassmannNecklace::from_bap(&f);
                assert!(DualGrassmannNecklace::new(n, dual.terms().to_vec()).is_ok(), "{f:?}");
                assert_eq!(dual.to_bap().unwrap(), f);
            }
        }
    }

    #[test]
    fn dual_examples() {
        let dual = DualGrassmannNecklace::from_bap(&bap(&[3, 4, 5, 6]));
        assert_eq!(dual.term(1), &set(4, &[3, 4]));
        let black = DualGrassmannNecklace::new(2, vec![KSubset::empty(2), KSubset::empty(2)]).unwrap();
        assert_eq!(black.to_bap().unwrap(), bap(&[1, 2]));
        let white = DualGrassmannNecklace::new(2, vec![set(2, &[1, 2]), set(2, &[1, 2])]).unwrap();
        assert_eq!(white.to_bap().unwrap(), bap(&[3, 4]));
    }

    #[test]
    fn malformed_necklaces_are_rejected() {
        // 1 ∉ I_1 but I_2 ≠ I_1
        let bad = GrassmannNecklace::new(2, vec![set(2, &[2]), set(2, &[1])]);
        assert!(matches!(bad, Err(Error::MalformedNecklace { position: 1 })));
        let sizes = GrassmannNecklace::new(2, vec![set(2, &[2]), set(2, &[1, 2])]);
        assert!(matches!(sizes, Err(Error::SizeMismatch { .. })));
        let text = GrassmannNecklace::parse(4, "1,2;2,3;3,4;1,4").unwrap();
        assert_eq!(text.to_string(), "1,2;2,3;3,4;1,4");
        assert_eq!(text.to_bap().unwrap(), bap(&[3, 4, 5, 6]));
    }
}
