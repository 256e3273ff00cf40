use std::fmt;

use crate::combinatorics::{is_symmetric_bap, mirror, BoundedAffinePermutation, KSubset};
use crate::error::{Error, Result};
use crate::graph::PlabicGraph;
use crate::linalg::RationalMatrix;
use crate::measurement::WeightedPlabicGraph;
use crate::rational::{self, Rational};

use super::bridge_sign;

/// One step of a bridge construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BridgeMove {
    /// A bridge from `left` (white end) to `right` (black end); every
    /// position strictly between must be a fixed point when it is added.
    Single { left: usize, right: usize, weight: Rational },
    /// The mirror bridge `(right', left')` followed by `(left, right)`,
    /// both with the same weight.
    Pair { left: usize, right: usize, weight: Rational },
}

impl BridgeMove {
    pub fn weight(&self) -> &Rational {
        match self {
            BridgeMove::Single { weight, .. } | BridgeMove::Pair { weight, .. } => weight,
        }
    }

    /// The bridges in the order they are added, for a boundary of size `n`.
    pub fn bridges(&self, n: usize) -> Vec<(usize, usize)> {
        match *self {
            BridgeMove::Single { left, right, .. } => vec![(left, right)],
            BridgeMove::Pair { left, right, .. } => vec![(mirror(n, right), mirror(n, left)), (left, right)],
        }
    }
}

/// A lollipop base followed by bridge moves, applied in order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BridgeScript {
    n: usize,
    base: KSubset,
    moves: Vec<BridgeMove>,
}

impl BridgeScript {
    /// Validates weights and replays the moves: each bridge must be
    /// addable to the permutation reached so far.
    pub fn new(base: KSubset, moves: Vec<BridgeMove>) -> Result<Self> {
        let script = BridgeScript { n: base.n(), base, moves };
        script.permutation()?;
        Ok(script)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> &KSubset {
        &self.base
    }

    pub fn moves(&self) -> &[BridgeMove] {
        &self.moves
    }

    /// Permutations after the base and after each move.
    pub fn permutations(&self) -> Result<Vec<BoundedAffinePermutation>> {
        let mut f = BoundedAffinePermutation::lollipop(&self.base);
        let mut out = vec![f.clone()];
        for (idx, mv) in self.moves.iter().enumerate() {
            if !rational::is_positive(mv.weight()) {
                return Err(Error::NonPositiveWeight(rational::format(mv.weight())));
            }
            let bridges = mv.bridges(self.n);
            if let BridgeMove::Pair { left, right, .. } = *mv {
                if !self.n.is_multiple_of(2) {
                    return Err(Error::OddGroundSet(self.n));
                }
                if right >= mirror(self.n, right) {
                    return Err(Error::InvalidScript(format!(
                        "move {}: pair ({left}, {right}) overlaps its mirror image",
                        idx + 1
                    )));
                }
            }
            for (l, r) in bridges {
                if l == 0 || r > self.n || !f.can_add_bridge(l, r) {
                    return Err(Error::InvalidScript(format!(
                        "move {}: cannot add a bridge at ({l}, {r}) to {f}",
                        idx + 1
                    )));
                }
                f = f.multiply_transposition(l, r)?;
            }
            out.push(f.clone());
        }
        Ok(out)
    }

    /// The permutation of the finished construction.
    pub fn permutation(&self) -> Result<BoundedAffinePermutation> {
        Ok(self.permutations()?.pop().expect("base permutation"))
    }

    /// The lollipop matrix of the base with each bridge `(l, r)` acting as
    /// `v_r += ±c·v_l`, the sign counting white fixed points between.
    pub fn matrix(&self) -> Result<RationalMatrix> {
        let mut f = BoundedAffinePermutation::lollipop(&self.base);
        let mut m = RationalMatrix::lollipop(&self.base);
        for mv in &self.moves {
            for (l, r) in mv.bridges(self.n) {
                let c = bridge_sign(&f, l, r) * mv.weight();
                m = m.add_column_multiple(l, r, &c)?;
                f = f.multiply_transposition(l, r)?;
            }
        }
        Ok(m)
    }

    /// Lollipop graph of the base with one bridge edge per bridge, weighted
    /// by its move and with unit weight on every other edge. When the
    /// result is symmetric the involution is stored.
    pub fn realize(&self) -> Result<WeightedPlabicGraph> {
        self.permutation()?;
        let mut g = PlabicGraph::lollipop(&self.base);
        let mut weights = vec![Rational::from_integer(1.into()); g.edge_count()];
        for mv in &self.moves {
            for (l, r) in mv.bridges(self.n) {
                let (h, bridge) = g.add_bridge_between(l, r)?;
                weights.resize(h.edge_count(), Rational::from_integer(1.into()));
                weights[bridge.0] = mv.weight().clone();
                g = h;
            }
        }
        if self.n.is_multiple_of(2) {
            if let Some(r) = g.infer_symmetry() {
                g = g.with_symmetry(Some(r));
            }
        }
        WeightedPlabicGraph::new(g, weights)
    }

    /// Base and moves are mirror-invariant: the base is a symmetric
    /// lollipop set, single moves are centred and pairs carry their mirror.
    pub fn is_symmetric(&self) -> bool {
        if !self.n.is_multiple_of(2) || 2 * self.base.len() != self.n {
            return false;
        }
        let base_ok = is_symmetric_bap(&BoundedAffinePermutation::lollipop(&self.base)).unwrap_or(false);
        base_ok
            && self.moves.iter().all(|mv| match *mv {
                BridgeMove::Single { left, right, .. } => left + right == self.n + 1,
                BridgeMove::Pair { .. } => true,
            })
    }

    /// Reads the text format:
    ///
    /// ```text
    /// n 4 base 1,2
    /// bridge 2:3 1
    /// pair 1 3/2
    /// ```
    ///
    /// `bridge i w` is shorthand for `bridge i:i+1 w`, and likewise for
    /// `pair`. An empty base is written `-`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .enumerate()
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (_, header) = lines.next().ok_or_else(|| Error::Parse("empty bridge script".into()))?;
        let words: Vec<&str> = header.split_whitespace().collect();
        let (n, base) = match words[..] {
            ["n", n, "base", base] => (n, base),
            ["n", n, "base"] => (n, "-"),
            _ => return Err(Error::Parse(format!("script header must be `n <n> base <list>`, found `{header}`"))),
        };
        let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad boundary size `{n}`")))?;
        let base = KSubset::parse(n, base)?;
        let mut moves = Vec::new();
        for (lineno, line) in lines {
            let words: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Parse(format!("line {}: expected `bridge|pair <i>[:<j>] <weight>`", lineno + 1));
            let [kind, site, weight] = words[..] else {
                return Err(bad());
            };
            let (left, right) = match site.split_once(':') {
                Some((l, r)) => (l.parse().map_err(|_| bad())?, r.parse().map_err(|_| bad())?),
                None => {
                    let l: usize = site.parse().map_err(|_| bad())?;
                    (l, l + 1)
                }
            };
            let weight = rational::parse(weight)?;
            moves.push(match kind {
                "bridge" => BridgeMove::Single { left, right, weight },
                "pair" => BridgeMove::Pair { left, right, weight },
                _ => return Err(bad()),
            });
        }
        Self::new(base, moves)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for BridgeScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = if self.base.is_empty() { "-".to_string() } else { self.base.to_string() };
        writeln!(f, "n {} base {}", self.n, base)?;
        for mv in &self.moves {
            let (kind, left, right, weight) = match mv {
                BridgeMove::Single { left, right, weight } => ("bridge", left, right, weight),
                BridgeMove::Pair { left, right, weight } => ("pair", left, right, weight),
            };
            let site = if *right == left + 1 { left.to_string() } else { format!("{left}:{right}") };
            writeln!(f, "{kind} {site} {}", rational::format(weight))?;
        }
        Ok(())
    }
}
