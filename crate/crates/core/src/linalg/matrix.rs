use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::combinatorics::{BoundedAffinePermutation, KSubset, Positroid};
use crate::error::{Error, Result};
use crate::plucker::PluckerVector;
use crate::rational::{self, Rational};

use super::bareiss;

/// A `k × n` matrix of exact rationals; its row span is a point of `Gr(k, n)`
/// when it has full row rank.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    rows: Vec<Vec<Rational>>,
}

impl RationalMatrix {
    /// Rows must all have length `n`. Rank is not checked here.
    pub fn new(n: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Dimension(format!("row of length {} in a matrix with {n} columns", bad.len())));
        }
        Ok(RationalMatrix { n, rows })
    }

    pub fn from_integers(n: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(n, rows.iter().map(|r| r.iter().map(|&x| rational::int(x)).collect()).collect())
    }

    /// Identity columns at `white` (in order), zero columns elsewhere.
    pub fn lollipop(white: &KSubset) -> Self {
        let n = white.n();
        let rows = white
            .iter()
            .map(|c| (1..=n).map(|j| if j == c { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        RationalMatrix { n, rows }
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Entry at 1-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.rows[row - 1][col - 1]
    }

    /// Column `j` of the periodic extension, `v_{j+n} = v_j`.
    pub fn column(&self, j: i64) -> Vec<Rational> {
        let c = (j - 1).rem_euclid(self.n as i64) as usize;
        self.rows.iter().map(|r| r[c].clone()).collect()
    }

    pub fn is_zero_column(&self, j: usize) -> bool {
        self.rows.iter().all(|r| r[j - 1].is_zero())
    }

    /// Rows scaled by the lcm of their denominators, and the scale factors.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let mut scales = Vec::with_capacity(self.k());
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                let ints = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
                scales.push(l);
                ints
            })
            .collect();
        (rows, scales)
    }

    /// Integer matrix with the same row span, restricted to `cols` (1-based,
    /// periodic) and transposed so that the chosen columns become rows.
    fn integer_columns(&self, cols: &[i64]) -> Vec<Vec<BigInt>> {
        let (rows, _) = self.integer_rows();
        cols.iter()
            .map(|&j| {
                let c = (j - 1).rem_euclid(self.n as i64) as usize;
                rows.iter().map(|r| r[c].clone()).collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        bareiss::rank(self.integer_rows().0)
    }

    fn require_full_rank(&self) -> Result<()> {
        if self.rank() < self.k() {
            Err(Error::RankDeficient)
        } else {
            Ok(())
        }
    }

    /// `Δ_J(M)`, the determinant of the columns in `J`.
    pub fn minor(&self, subset: &KSubset) -> Result<Rational> {
        if subset.n() != self.n {
            return Err(Error::GroundSetMismatch { left: self.n, right: subset.n() });
        }
        if subset.len() != self.k() {
            return Err(Error::SizeMismatch { left: self.k(), right: subset.len() });
        }
        let (rows, scales) = self.integer_rows();
        Ok(minor_of_integer_rows(&rows, &scales, subset))
    }

    /// All maximal minors, canonically scaled.
    pub fn plucker_vector(&self) -> Result<PluckerVector> {
        self.require_full_rank()?;
        let (rows, scales) = self.integer_rows();
        let k = self.k();
        let coords = KSubset::all(self.n, k).into_iter().map(|s| {
            let v = minor_of_integer_rows(&rows, &scales, &s);
            (s, v)
        });
        PluckerVector::new(self.n, k, coords)
    }

    /// A matrix with an identity in the columns of the lex-first basis of
    /// `p`, whose Plücker vector is `p`. Fails when `p` violates the
    /// Plücker relations.
    pub fn from_plucker(p: &PluckerVector) -> Result<Self> {
        let (n, k) = (p.n(), p.k());
        let (basis, pivot) = p.iter().next().map(|(s, v)| (s.clone(), v.clone())).ok_or(Error::RankDeficient)?;
        let elems = basis.elements();
        let rows = (0..k)
            .map(|r| {
                (1..=n)
                    .map(|j| {
                        let swapped = basis.exchange(elems[r], j);
                        if swapped.len() < k {
                            return Rational::zero();
                        }
                        let (lo, hi) = (elems[r].min(j), elems[r].max(j));
                        let between = elems.iter().filter(|&&i| lo < i && i < hi).count();
                        let v = p.get(&swapped) / &pivot;
                        if between % 2 == 0 { v } else { -v }
                    })
                    .collect()
            })
            .collect();
        let m = RationalMatrix { n, rows };
        if &m.plucker_vector()? != p {
            return Err(Error::PluckerRelations);
        }
        Ok(m)
    }

    /// `{ J : Δ_J ≠ 0 }`.
    pub fn matroid(&self) -> Result<Positroid> {
        Ok(self.plucker_vector()?.support())
    }

    /// All canonical Plücker coordinates are nonnegative.
    pub fn is_tnn(&self) -> Result<bool> {
        Ok(self.plucker_vector()?.is_nonnegative())
    }

    /// `f(i)` is the smallest `r ≥ i` with `v_i ∈ span(v_{i+1}, ..., v_r)`.
    pub fn bap(&self) -> Result<BoundedAffinePermutation> {
        self.require_full_rank()?;
        let n = self.n as i64;
        let mut window = Vec::with_capacity(self.n);
        for i in 1..=n {
            let mut value = None;
            for r in i..=i + n {
                let span: Vec<i64> = ((i + 1)..=r).collect();
                let base = bareiss::rank(self.integer_columns(&span));
                let mut with = span.clone();
                with.push(i);
                if bareiss::rank(self.integer_columns(&with)) == base {
                    value = Some(r);
                    break;
                }
            }
            window.push(value.expect("v_i reappears as v_{i+n}"));
        }
        BoundedAffinePermutation::new(window, self.n)
    }

    /// Column `dst` gains `c` times column `src`.
    pub fn add_column_multiple(&self, src: usize, dst: usize, c: &Rational) -> Result<Self> {
        for j in [src, dst] {
            if j == 0 || j > self.n {
                return Err(Error::IndexOutOfRange { index: j as i64, n: self.n });
            }
        }
        if src == dst {
            return Err(Error::Dimension("a column cannot be added to itself".into()));
        }
        let mut rows = self.rows.clone();
        for row in &mut rows {
            let delta = &row[src - 1] * c;
            row[dst - 1] += delta;
        }
        Ok(RationalMatrix { n: self.n, rows })
    }

    /// `M · x_i(c)`: column `i + 1` becomes `v_{i+1} + c·v_i`, for `i` in `[n − 1]`.
    pub fn apply_x(&self, i: usize, c: &Rational) -> Result<Self> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange { index: i as i64, n: self.n });
        }
        self.add_column_multiple(i, i + 1, c)
    }

    /// `A · M` for a square `A`.
    pub fn left_multiply(&self, a: &[Vec<Rational>]) -> Result<Self> {
        let k = self.k();
        if a.len() != k || a.iter().any(|r| r.len() != k) {
            return Err(Error::Dimension(format!("left factor must be {k} × {k}")));
        }
        let rows = a
            .iter()
            .map(|arow| {
                (0..self.n)
                    .map(|j| arow.iter().zip(&self.rows).map(|(x, r)| x * &r[j]).sum())
                    .collect()
            })
            .collect();
        Ok(RationalMatrix { n: self.n, rows })
    }

    /// Reads `k n` followed by `k` rows of `n` rationals.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty matrix file".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad matrix header `{header}`"))))
            .collect::<Result<_>>()?;
        let [k, n] = dims[..] else {
            return Err(Error::Parse(format!("matrix header must be `k n`, found `{header}`")));
        };
        let mut rows = Vec::with_capacity(k);
        for _ in 0..k {
            let line = lines.next().ok_or_else(|| Error::Parse(format!("expected {k} matrix rows")))?;
            let row = line.split_whitespace().map(rational::parse).collect::<Result<Vec<_>>>()?;
            if row.len() != n {
                return Err(Error::Parse(format!("row `{line}` has {} entries, expected {n}", row.len())));
            }
            rows.push(row);
        }
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("unexpected line after matrix rows: `{extra}`")));
        }
        Self::new(n, rows)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.k(), self.n);
        for row in &self.rows {
            let parts: Vec<String> = row.iter().map(rational::format).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }
}

fn minor_of_integer_rows(rows: &[Vec<BigInt>], scales: &[BigInt], subset: &KSubset) -> Rational {
    let sub = rows.iter().map(|r| subset.iter().map(|j| r[j - 1].clone()).collect()).collect();
    let d = bareiss::det(sub);
    let scale = scales.iter().fold(BigInt::one(), |acc, s| acc * s);
    Rational::new(d, scale)
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}
