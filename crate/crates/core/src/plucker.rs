use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::combinatorics::{KSubset, Positroid};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A projective point of `P^{C(n,k) − 1}` with exact rational coordinates.
///
/// Only nonzero coordinates are stored, and the vector is always scaled so
/// that the lexicographically first nonzero coordinate equals one. Two
/// vectors represent the same projective point exactly when they are equal.
#[derive(Clone, PartialEq, Eq)]
pub struct PluckerVector {
    n: usize,
    k: usize,
    coords: BTreeMap<KSubset, Rational>,
}

impl PluckerVector {
    /// Canonicalizes arbitrary coordinates. Zero entries are dropped;
    /// all-zero input is rejected.
    pub fn new(n: usize, k: usize, coords: impl IntoIterator<Item = (KSubset, Rational)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (subset, value) in coords {
            if subset.n() != n {
                return Err(Error::GroundSetMismatch { left: n, right: subset.n() });
            }
            if subset.len() != k {
                return Err(Error::SizeMismatch { left: k, right: subset.len() });
            }
            if !value.is_zero() {
                map.insert(subset, value);
            }
        }
        let Some(lead) = map.values().next().cloned() else {
            return Err(Error::RankDeficient);
        };
        for value in map.values_mut() {
            *value = &*value / &lead;
        }
        Ok(PluckerVector { n, k, coords: map })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `Δ_J`, zero when absent.
    pub fn get(&self, subset: &KSubset) -> Rational {
        self.coords.get(subset).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero coordinates in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&KSubset, &Rational)> {
        self.coords.iter()
    }

    /// The matroid: subsets with a nonzero coordinate.
    pub fn support(&self) -> Positroid {
        Positroid::new(self.n, self.k, self.coords.keys().cloned()).expect("canonical vectors are nonzero")
    }

    /// Every coordinate is nonnegative in the canonical scaling.
    pub fn is_nonnegative(&self) -> bool {
        self.coords.values().all(|v| !v.is_negative())
    }

    /// `Δ_I = Δ_{R(I)}` for every `I`.
    pub fn is_symmetric(&self) -> Result<bool> {
        if !self.n.is_multiple_of(2) {
            return Err(Error::OddGroundSet(self.n));
        }
        if 2 * self.k != self.n {
            return Err(Error::NotHalfType { k: self.k, n: self.n });
        }
        for (subset, value) in &self.coords {
            if self.get(&subset.reflect()?) != *value {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// One line per nonzero coordinate: `i1,...,ik<TAB>p/q`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (subset, value) in &self.coords {
            out.push_str(&format!("{}\t{}\n", subset, rational::format(value)));
        }
        out
    }

    /// Reads the line format of [`Self::to_text`]; the ground set size is
    /// not part of the format and must be supplied.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut coords = Vec::new();
        let mut k = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim_end_matches(['\r', '\n']);
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            // a line without a separator is the coordinate of the empty set
            let (subset, value) = line
                .split_once('\t')
                .or_else(|| line.trim().rsplit_once(char::is_whitespace))
                .unwrap_or(("", line.trim()));
            let subset = KSubset::parse(n, subset.trim())?;
            let value = rational::parse(value)?;
            if *k.get_or_insert(subset.len()) != subset.len() {
                return Err(Error::Parse(format!("line {}: subsets of different sizes", lineno + 1)));
            }
            coords.push((subset, value));
        }
        let k = k.ok_or_else(|| Error::Parse("empty Plücker vector".into()))?;
        Self::new(n, k, coords)
    }
}

impl fmt::Debug for PluckerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Plücker(k={}, n={})", self.k, self.n)?;
        f.debug_map().entries(self.coords.iter().map(|(s, v)| (s, rational::format(v)))).finish()
    }
}
