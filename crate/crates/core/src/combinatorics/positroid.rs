use std::collections::BTreeSet;

use crate::error::{Error, Result};

use super::order::{gale_leq_unchecked, shifted_rank, sorted_in};
use super::{DualGrassmannNecklace, GrassmannNecklace, KSubset};

/// A collection of `k`-subsets of `[n]`.
///
/// Construction only checks sizes. Whether the collection really is a
/// positroid is decided by [`Positroid::is_positroid`], which runs the
/// necklace round trip.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Positroid {
    n: usize,
    k: usize,
    members: BTreeSet<KSubset>,
}

impl Positroid {
    pub fn new(n: usize, k: usize, members: impl IntoIterator<Item = KSubset>) -> Result<Self> {
        let members: BTreeSet<KSubset> = members.into_iter().collect();
        if members.is_empty() {
            return Err(Error::EmptyCollection);
        }
        for m in &members {
            if m.n() != n {
                return Err(Error::GroundSetMismatch { left: n, right: m.n() });
            }
            if m.len() != k {
                return Err(Error::SizeMismatch { left: k, right: m.len() });
            }
        }
        Ok(Positroid { n, k, members })
    }

    /// The positroid of a necklace: `{ J : I_i ≤_i J for all i }`.
    pub fn from_necklace(necklace: &GrassmannNecklace) -> Self {
        let (n, k) = (necklace.n(), necklace.k());
        let members = KSubset::all(n, k)
            .into_iter()
            .filter(|j| (1..=n).all(|i| gale_leq_unchecked(i, necklace.term(i), j)))
            .collect();
        Positroid { n, k, members }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn members(&self) -> &BTreeSet<KSubset> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, subset: &KSubset) -> bool {
        self.members.contains(subset)
    }

    /// Lexicographically smallest member after sorting in `≤_a`; for a
    /// matroid this is the unique Gale-minimal basis.
    fn extreme(&self, a: usize, maximal: bool) -> &KSubset {
        let key = |s: &KSubset| -> Vec<usize> {
            let mut ranks: Vec<usize> = sorted_in(a, s).into_iter().map(|x| shifted_rank(self.n, a, x)).collect();
            if maximal {
                ranks.reverse();
            }
            ranks
        };
        let chosen = if maximal {
            self.members.iter().max_by_key(|s| key(s))
        } else {
            self.members.iter().min_by_key(|s| key(s))
        };
        chosen.expect("positroids are nonempty")
    }

    /// `I_i` is the `≤_i`-minimal member. Fails with
    /// [`Error::MalformedNecklace`] when the minima do not form a necklace.
    pub fn necklace(&self) -> Result<GrassmannNecklace> {
        let terms = (1..=self.n).map(|i| self.extreme(i, false).clone()).collect();
        GrassmannNecklace::new(self.n, terms)
    }

    /// `J_i` is the `≤_i`-maximal member.
    pub fn dual_necklace(&self) -> Result<DualGrassmannNecklace> {
        let terms = (1..=self.n).map(|i| self.extreme(i, true).clone()).collect();
        DualGrassmannNecklace::new(self.n, terms)
    }

    /// Round trip through the necklace of minima.
    pub fn is_positroid(&self) -> bool {
        match self.necklace() {
            Ok(nk) => Positroid::from_necklace(&nk) == *self,
            Err(_) => false,
        }
    }
}
