use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A subset of the ground set `[n] = {1, ..., n}`, stored in ascending order.
///
/// Cyclic orders are applied at comparison time (see [`super::gale_leq`]);
/// the stored order is always the standard one. Subsets of the same ground
/// set compare lexicographically, which is the order used for Plücker
/// coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KSubset {
    n: usize,
    elems: Vec<usize>,
}

impl KSubset {
    pub fn new(n: usize, elems: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut elems: Vec<usize> = elems.into_iter().collect();
        elems.sort_unstable();
        if let Some(&bad) = elems.iter().find(|&&x| x == 0 || x > n) {
            return Err(Error::IndexOutOfRange { index: bad as i64, n });
        }
        if elems.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSubset(format!("repeated element in {elems:?}")));
        }
        Ok(KSubset { n, elems })
    }

    pub(crate) fn from_sorted_unchecked(n: usize, elems: Vec<usize>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elems.iter().all(|&x| x >= 1 && x <= n));
        KSubset { n, elems }
    }

    pub fn empty(n: usize) -> Self {
        KSubset { n, elems: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        KSubset { n, elems: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.elems.iter().copied()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    /// `(self ∪ {incoming}) − {outgoing}`.
    pub fn exchange(&self, outgoing: usize, incoming: usize) -> KSubset {
        let mut elems: Vec<usize> = self.elems.iter().copied().filter(|&x| x != outgoing).collect();
        if let Err(pos) = elems.binary_search(&incoming) {
            elems.insert(pos, incoming);
        }
        KSubset { n: self.n, elems }
    }

    /// All `k`-subsets of `[n]` in lexicographic order.
    pub fn all(n: usize, k: usize) -> Vec<KSubset> {
        let mut out = Vec::new();
        if k > n {
            return out;
        }
        let mut current: Vec<usize> = (1..=k).collect();
        loop {
            out.push(KSubset { n, elems: current.clone() });
            // advance to the next combination
            let mut pos = k;
            while pos > 0 && current[pos - 1] == n - k + pos {
                pos -= 1;
            }
            if pos == 0 {
                return out;
            }
            current[pos - 1] += 1;
            for q in pos..k {
                current[q] = current[q - 1] + 1;
            }
        }
    }

    /// The reflection `R(I) = [2m] \ {i' : i ∈ I}` with `i' = 2m + 1 − i`.
    pub fn reflect(&self) -> Result<KSubset> {
        if !self.n.is_multiple_of(2) {
            return Err(Error::OddGroundSet(self.n));
        }
        let mirrored: Vec<usize> = self.elems.iter().map(|&i| self.n + 1 - i).collect();
        let elems = (1..=self.n).filter(|x| !mirrored.contains(x)).collect();
        Ok(KSubset { n: self.n, elems })
    }

    /// Parses a comma-separated list such as `1,3,4`; the empty string is `∅`.
    pub fn parse(n: usize, text: &str) -> Result<KSubset> {
        let text = text.trim();
        if text.is_empty() || text == "-" {
            return Ok(KSubset::empty(n));
        }
        let elems = text
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad subset element `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        KSubset::new(n, elems)
    }
}

impl Ord for KSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elems.cmp(&other.elems).then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for KSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elems.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, xs: &[usize]) -> KSubset {
        KSubset::new(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn construction_sorts_and_validates() {
        assert_eq!(set(5, &[4, 1, 3]).elements(), &[1, 3, 4]);
        assert!(matches!(KSubset::new(4, [0]), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(KSubset::new(4, [5]), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(KSubset::new(4, [2, 2]), Err(Error::InvalidSubset(_))));
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let all = KSubset::all(5, 2);
        assert_eq!(all.len(), 10);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(KSubset::all(3, 0), vec![KSubset::empty(3)]);
        assert_eq!(KSubset::all(3, 3), vec![KSubset::full(3)]);
        assert!(KSubset::all(2, 3).is_empty());
    }

    #[test]
    fn reflection_examples() {
        assert_eq!(set(4, &[1, 2]).reflect().unwrap(), set(4, &[1, 2]));
        assert_eq!(set(4, &[1, 4]).reflect().unwrap(), set(4, &[2, 3]));
        assert_eq!(set(8, &[1, 2, 3, 4]).reflect().unwrap(), set(8, &[1, 2, 3, 4]));
        assert!(matches!(set(5, &[1]).reflect(), Err(Error::OddGroundSet(5))));
    }

    #[test]
    fn reflection_is_an_involution_on_half_subsets() {
        for n in [2, 4, 6, 8] {
            for s in KSubset::all(n, n / 2) {
                let r = s.reflect().unwrap();
                assert_eq!(r.len(), n / 2);
                assert_eq!(r.reflect().unwrap(), s);
            }
        }
        // sizes complement in general
        let s = set(6, &[1]);
        assert_eq!(s.reflect().unwrap().len(), 5);
    }

    #[test]
    fn exchange_and_parse() {
        let s = set(5, &[2, 4]);
        assert_eq!(s.exchange(4, 1), set(5, &[1, 2]));
        assert_eq!(KSubset::parse(5, "4, 2").unwrap(), s);
        assert_eq!(KSubset::parse(5, "").unwrap(), KSubset::empty(5));
        assert_eq!(s.to_string(), "2,4");
    }
}
