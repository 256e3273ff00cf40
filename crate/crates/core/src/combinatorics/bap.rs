use std::fmt;

use crate::error::{Error, Result};

use super::KSubset;

/// A bounded affine permutation of type `(k, n)`.
///
/// Only the window `f(1), ..., f(n)` is stored; every other value follows
/// from `f(i + n) = f(i) + n`. A position `i` with `f(i) = i` is a black
/// fixed point and one with `f(i) = i + n` is a white fixed point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoundedAffinePermutation {
    n: usize,
    k: usize,
    window: Vec<i64>,
}

impl BoundedAffinePermutation {
    /// Validates a window. Checks run in the order length, boundedness,
    /// integrality of the type, bijectivity; the first failure is reported.
    pub fn new(window: Vec<i64>, n: usize) -> Result<Self> {
        if window.len() != n || n == 0 {
            return Err(Error::WindowLength { expected: n, found: window.len() });
        }
        let n_i = n as i64;
        for (idx, &value) in window.iter().enumerate() {
            let i = idx as i64 + 1;
            if value < i || value > i + n_i {
                return Err(Error::Unbounded { position: idx + 1, value });
            }
        }
        let sum: i64 = window.iter().enumerate().map(|(idx, &v)| v - (idx as i64 + 1)).sum();
        if sum % n_i != 0 {
            return Err(Error::NonIntegralType { sum, n });
        }
        let mut seen = vec![false; n];
        for (idx, &value) in window.iter().enumerate() {
            let residue = (value - 1).rem_euclid(n_i) as usize;
            if std::mem::replace(&mut seen[residue], true) {
                return Err(Error::NotBijective { position: idx + 1 });
            }
        }
        Ok(BoundedAffinePermutation { n, k: (sum / n_i) as usize, window })
    }

    /// The lollipop permutation: white fixed points on `white`, black elsewhere.
    pub fn lollipop(white: &KSubset) -> Self {
        let n = white.n();
        let window = (1..=n)
            .map(|i| if white.contains(i) { (i + n) as i64 } else { i as i64 })
            .collect();
        BoundedAffinePermutation { n, k: white.len(), window }
    }

    /// Builds `f` from its reduction `f̄ ∈ S_n` and the colours of its fixed
    /// points (`white_fixed(i)` decides fixed points of `f̄`).
    pub(crate) fn from_bar(bar: &[usize], white_fixed: impl Fn(usize) -> bool) -> Result<Self> {
        let n = bar.len();
        let window = bar
            .iter()
            .enumerate()
            .map(|(idx, &target)| {
                let i = idx + 1;
                let value = match target.cmp(&i) {
                    std::cmp::Ordering::Greater => target,
                    std::cmp::Ordering::Less => target + n,
                    std::cmp::Ordering::Equal if white_fixed(i) => i + n,
                    std::cmp::Ordering::Equal => i,
                };
                value as i64
            })
            .collect();
        Self::new(window, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `f(i)` for any integer `i`.
    pub fn eval(&self, i: i64) -> i64 {
        let n = self.n as i64;
        let r = (i - 1).rem_euclid(n);
        let q = (i - 1).div_euclid(n);
        self.window[r as usize] + q * n
    }

    /// `f̄(i)`, the residue of `f(i)` in `[n]`.
    pub fn bar(&self, i: usize) -> usize {
        ((self.eval(i as i64) - 1).rem_euclid(self.n as i64) + 1) as usize
    }

    pub fn bar_inverse(&self, j: usize) -> usize {
        (1..=self.n).find(|&i| self.bar(i) == j).expect("window is a bijection mod n")
    }

    /// `f̄` as a list indexed from position 1.
    pub fn bar_permutation(&self) -> Vec<usize> {
        (1..=self.n).map(|i| self.bar(i)).collect()
    }

    pub fn is_black_fixed(&self, i: usize) -> bool {
        self.eval(i as i64) == i as i64
    }

    pub fn is_white_fixed(&self, i: usize) -> bool {
        self.eval(i as i64) == (i + self.n) as i64
    }

    pub fn is_fixed(&self, i: usize) -> bool {
        self.is_black_fixed(i) || self.is_white_fixed(i)
    }

    /// Positions in `[n]` that are not fixed points, ascending.
    pub fn moving_positions(&self) -> Vec<usize> {
        (1..=self.n).filter(|&i| !self.is_fixed(i)).collect()
    }

    pub fn white_fixed_points(&self) -> KSubset {
        KSubset::from_sorted_unchecked(self.n, (1..=self.n).filter(|&i| self.is_white_fixed(i)).collect())
    }

    pub fn is_all_fixed(&self) -> bool {
        (1..=self.n).all(|i| self.is_fixed(i))
    }

    /// `Σ (f(i) − i)` over one window; equals `k·n`.
    pub fn total_displacement(&self) -> i64 {
        self.window.iter().enumerate().map(|(idx, &v)| v - idx as i64 - 1).sum()
    }

    fn check_position(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            Err(Error::IndexOutOfRange { index: i as i64, n: self.n })
        } else {
            Ok(())
        }
    }

    /// `f` has a bridge at `(i, i+1)`: `i < f(i) < f(i+1) < i + n + 1`.
    /// Position `n` pairs with `n + 1 ≡ 1` through the periodic extension.
    pub fn has_bridge(&self, i: usize) -> Result<bool> {
        self.check_position(i)?;
        let i = i as i64;
        let (fi, fnext) = (self.eval(i), self.eval(i + 1));
        Ok(i < fi && fi < fnext && fnext < i + self.n as i64 + 1)
    }

    /// Bridge between `left < right` where every position strictly between
    /// them is a fixed point: `left < f(left) < f(right) <= left + n` with
    /// neither end fixed. For `right = left + 1` this is [`Self::has_bridge`].
    pub fn has_bridge_between(&self, left: usize, right: usize) -> Result<bool> {
        self.check_position(left)?;
        self.check_position(right)?;
        if left >= right {
            return Ok(false);
        }
        if !((left + 1)..right).all(|p| self.is_fixed(p)) {
            return Ok(false);
        }
        if self.is_fixed(left) || self.is_fixed(right) {
            return Ok(false);
        }
        let (l, fl, fr) = (left as i64, self.eval(left as i64), self.eval(right as i64));
        Ok(l < fl && fl < fr && fr <= l + self.n as i64)
    }

    /// Bridges between consecutive non-fixed positions `p_a < p_{a+1}`
    /// (no wrap), in increasing order of `p_a`.
    pub fn removable_bridges(&self) -> Vec<(usize, usize)> {
        let moving = self.moving_positions();
        moving
            .windows(2)
            .filter(|w| self.has_bridge_between(w[0], w[1]).unwrap_or(false))
            .map(|w| (w[0], w[1]))
            .collect()
    }

    /// Whether a bridge can be added between `left < right`: every position
    /// strictly between is fixed and `f(left) > f(right)`.
    pub fn can_add_bridge(&self, left: usize, right: usize) -> bool {
        left >= 1
            && right <= self.n
            && left < right
            && ((left + 1)..right).all(|p| self.is_fixed(p))
            && self.eval(left as i64) > self.eval(right as i64)
    }

    /// All `(left, right)` accepted by [`Self::can_add_bridge`].
    pub fn addable_bridges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for left in 1..self.n {
            for right in (left + 1)..=self.n {
                if self.can_add_bridge(left, right) {
                    out.push((left, right));
                }
                if !self.is_fixed(right) {
                    break;
                }
            }
        }
        out
    }

    /// `f · s_i`: swaps the values at positions `i` and `i + 1`, wrapping
    /// through `f(n + 1) = f(1) + n` when `i = n`.
    pub fn multiply_simple(&self, i: usize) -> Result<Self> {
        self.check_position(i)?;
        let n = self.n as i64;
        let mut window = self.window.clone();
        if i < self.n {
            window.swap(i - 1, i);
        } else {
            let (f_n, f_1) = (self.window[self.n - 1], self.window[0]);
            window[self.n - 1] = f_1 + n;
            window[0] = f_n - n;
        }
        Self::new(window, self.n)
    }

    /// `f · (left right)` for `left < right` in `[n]`.
    pub fn multiply_transposition(&self, left: usize, right: usize) -> Result<Self> {
        self.check_position(left)?;
        self.check_position(right)?;
        let mut window = self.window.clone();
        window.swap(left - 1, right - 1);
        Self::new(window, self.n)
    }

    /// Every element of `Bd(k, n)`, in lexicographic order of windows.
    pub fn enumerate(k: usize, n: usize) -> Vec<Self> {
        let mut out: Vec<Self> = Self::enumerate_all(n).into_iter().filter(|f| f.k == k).collect();
        out.sort_by(|a, b| a.window.cmp(&b.window));
        out
    }

    /// Every bounded affine permutation with period `n`, all types.
    pub fn enumerate_all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut window = vec![0i64; n];
        let mut used = vec![false; n];
        fill(n, 0, &mut window, &mut used, &mut out);
        out.sort_by(|a, b| (a.k, &a.window).cmp(&(b.k, &b.window)));
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let window = text
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad window entry `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        let n = window.len();
        Self::new(window, n)
    }
}

fn fill(n: usize, idx: usize, window: &mut Vec<i64>, used: &mut Vec<bool>, out: &mut Vec<BoundedAffinePermutation>) {
    if idx == n {
        if let Ok(f) = BoundedAffinePermutation::new(window.clone(), n) {
            out.push(f);
        }
        return;
    }
    let i = idx + 1;
    for value in i..=i + n {
        let residue = (value - 1) % n;
        if used[residue] {
            continue;
        }
        used[residue] = true;
        window[idx] = value as i64;
        fill(n, idx + 1, window, used, out);
        used[residue] = false;
    }
}

impl fmt::Display for BoundedAffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for BoundedAffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bd({}, {})[{}]", self.k, self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bap(w: &[i64]) -> BoundedAffinePermutation {
        BoundedAffinePermutation::new(w.to_vec(), w.len()).unwrap()
    }

    #[test]
    fn construction_examples() {
        let f = bap(&[3, 4, 5, 6]);
        assert_eq!(f.k(), 2);
        let id = bap(&[1, 2, 3, 4]);
        assert_eq!(id.k(), 0);
        assert!((1..=4).all(|i| id.is_black_fixed(i)));
        assert!(matches!(
            BoundedAffinePermutation::new(vec![2, 3, 6, 5], 4),
            Err(Error::NonIntegralType { sum: 6, n: 4 })
        ));
    }

    #[test]
    fn each_invariant_has_its_own_error() {
        assert!(matches!(BoundedAffinePermutation::new(vec![1, 2], 3), Err(Error::WindowLength { .. })));
        assert!(matches!(BoundedAffinePermutation::new(vec![0, 2], 2), Err(Error::Unbounded { position: 1, .. })));
        assert!(matches!(BoundedAffinePermutation::new(vec![1, 5], 2), Err(Error::Unbounded { position: 2, .. })));
        // bounded, integral type, but residues collide
        assert!(matches!(BoundedAffinePermutation::new(vec![2, 2, 5], 3), Err(Error::NotBijective { position: 2 })));
    }

    #[test]
    fn periodic_evaluation() {
        let f = bap(&[3, 4, 5, 6]);
        assert_eq!(f.eval(5), 7);
        assert_eq!(f.eval(0), 2);
        assert_eq!(f.eval(-3), 3 - 4);
        assert_eq!(f.bar_permutation(), vec![3, 4, 1, 2]);
        assert_eq!(f.bar_inverse(1), 3);
    }

    #[test]
    fn bridges() {
        let top = bap(&[3, 4, 5, 6]);
        assert!(top.has_bridge(1).unwrap());
        assert!(!bap(&[1, 2]).has_bridge(1).unwrap());
        // f(2) = 4 is not < 1 + 2 + 1
        assert!(!bap(&[3, 4]).has_bridge(1).unwrap());
        assert!(top.has_bridge(5).is_err());
        // the only crossing of (3,2,4) passes over the black fixed point 2
        let blocked = bap(&[3, 2, 4]);
        assert!(!blocked.has_bridge(1).unwrap() && !blocked.has_bridge(2).unwrap());
        assert_eq!(blocked.removable_bridges(), vec![(1, 3)]);
    }

    #[test]
    fn simple_multiplication() {
        let top = bap(&[3, 4, 5, 6]);
        assert_eq!(top.multiply_simple(1).unwrap().window(), &[4, 3, 5, 6]);
        assert_eq!(bap(&[4, 3, 5, 6]).multiply_simple(1).unwrap(), top);
        assert_eq!(top.multiply_simple(4).unwrap().window(), &[2, 4, 5, 7]);
        // s_1 on the identity would leave the bounded range
        assert!(bap(&[1, 2, 3]).multiply_simple(1).is_err());
    }

    #[test]
    fn enumeration_counts() {
        // |Bd(k, n)| summed over k is the number of decorated permutations
        let counts: Vec<usize> = (1..=5).map(|n| BoundedAffinePermutation::enumerate_all(n).len()).collect();
        assert_eq!(counts, vec![2, 5, 16, 65, 326]);
        // Bd(1, n) has 2^n - 1 elements
        assert_eq!(BoundedAffinePermutation::enumerate(1, 4).len(), 15);
    }

    #[test]
    fn adding_a_bridge_is_undone_by_removal() {
        for f in BoundedAffinePermutation::enumerate_all(5) {
            for (l, r) in f.addable_bridges() {
                let g = f.multiply_transposition(l, r).unwrap();
                assert!(g.has_bridge_between(l, r).unwrap(), "{f:?} + ({l},{r})");
            }
            for (l, r) in f.removable_bridges() {
                let g = f.multiply_transposition(l, r).unwrap();
                assert!(g.can_add_bridge(l, r));
            }
        }
    }
}
