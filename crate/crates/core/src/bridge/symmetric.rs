use crate::combinatorics::{is_symmetric_bap, mirror, BoundedAffinePermutation};
use crate::error::{Error, Result};
use crate::graph::PlabicGraph;
use crate::linalg::RationalMatrix;
use crate::rational::{self, Rational};

use super::{bridge_ratio, remove_with, require_tnn, BridgeMove, BridgeScript, DecompositionTrace, RemovalStep};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Site {
    /// `(p_m, p_{m+1})`, a bridge fixed by the reflection.
    Center(usize, usize),
    /// `(p_a, p_{a+1})` in the left half, removed together with its mirror.
    Pair(usize, usize),
}

/// After mirrored fixed points are set aside, the centre bridge if present,
/// otherwise the first bridge in the left half.
fn symmetric_site(f: &BoundedAffinePermutation) -> Result<Option<Site>> {
    let moving = f.moving_positions();
    if moving.is_empty() {
        return Ok(None);
    }
    let h = moving.len() / 2;
    if !moving.len().is_multiple_of(2) || h == 0 {
        return Err(Error::NotSymmetric("bounded affine permutation"));
    }
    let (a, b) = (moving[h - 1], moving[h]);
    if f.has_bridge_between(a, b)? {
        return Ok(Some(Site::Center(a, b)));
    }
    for w in moving[..h].windows(2) {
        if f.has_bridge_between(w[0], w[1])? {
            return Ok(Some(Site::Pair(w[0], w[1])));
        }
    }
    Err(Error::NoBridge { left: moving[0], right: moving[moving.len() - 1] })
}

fn require_symmetric_point(x: &RationalMatrix) -> Result<()> {
    if !x.plucker_vector()?.is_symmetric()? {
        return Err(Error::NotSymmetric("point"));
    }
    Ok(())
}

fn ratio_mismatch(what: &str, a: &Rational, b: &Rational) -> Error {
    Error::RatioMismatch(format!("{what}: {} vs {}", rational::format(a), rational::format(b)))
}

fn require_symmetric_tnn(x: &RationalMatrix) -> Result<()> {
    let n = x.n();
    if !n.is_multiple_of(2) {
        return Err(Error::OddGroundSet(n));
    }
    if 2 * x.k() != n {
        return Err(Error::NotHalfType { k: x.k(), n });
    }
    require_tnn(x)?;
    require_symmetric_point(x)
}

fn remove_center(x: &RationalMatrix, f: &BoundedAffinePermutation) -> Result<(RationalMatrix, RemovalStep)> {
    let moving = f.moving_positions();
    let h = moving.len() / 2;
    if h == 0 {
        return Err(Error::NoBridge { left: x.n() / 2, right: x.n() / 2 + 1 });
    }
    remove_with(x, f, moving[h - 1], moving[h])
}

/// For a pair `(i, j)` with mirror `(j', i')` the two ratios must agree on
/// the input, and the mirror ratio after removing `(i, j)` must still equal
/// the removed weight.
fn remove_pair(
    x: &RationalMatrix,
    f: &BoundedAffinePermutation,
    i: usize,
    j: usize,
) -> Result<(RationalMatrix, [RemovalStep; 2])> {
    let n = x.n();
    let (mi, mj) = (mirror(n, j), mirror(n, i));
    if j >= mi {
        return Err(Error::NoBridge { left: i, right: j });
    }
    if !f.has_bridge_between(i, j)? {
        return Err(Error::NoBridge { left: i, right: j });
    }
    let mirrored = bridge_ratio(x, f, mi, mj)?;
    let (half, first) = remove_with(x, f, i, j)?;
    if mirrored != first.weight {
        return Err(ratio_mismatch("mirror ratio before removal", &first.weight, &mirrored));
    }
    let (next, second) = remove_with(&half, &half.bap()?, mi, mj)?;
    if second.weight != first.weight {
        return Err(ratio_mismatch("mirror ratio after removal", &first.weight, &second.weight));
    }
    Ok((next, [first, second]))
}

/// Removes the bridge between the two middle non-fixed positions of a
/// symmetric point; the result is again symmetric.
pub fn sym_remove_center(x: &RationalMatrix) -> Result<(RationalMatrix, RemovalStep)> {
    require_symmetric_tnn(x)?;
    remove_center(x, &x.bap()?)
}

/// Removes the bridge `(left, right)` and its mirror `(right', left')`
/// from a symmetric point with one common weight.
pub fn sym_remove_pair(x: &RationalMatrix, left: usize, right: usize) -> Result<(RationalMatrix, [RemovalStep; 2])> {
    require_symmetric_tnn(x)?;
    remove_pair(x, &x.bap()?, left, right)
}

/// Removes centre bridges and mirrored pairs of bridges until only
/// lollipops remain.
pub fn sym_decompose_traced(x: &RationalMatrix) -> Result<DecompositionTrace> {
    require_symmetric_tnn(x)?;
    let mut current = x.clone();
    let mut steps = Vec::new();
    let mut moves = Vec::new();
    loop {
        let f = current.bap()?;
        match symmetric_site(&f)? {
            None => {
                moves.reverse();
                let script = BridgeScript::new(f.white_fixed_points(), moves)?;
                return Ok(DecompositionTrace { steps, residual: current, script });
            }
            Some(Site::Center(a, b)) => {
                let (next, step) = remove_with(&current, &f, a, b)?;
                moves.push(BridgeMove::Single { left: a, right: b, weight: step.weight.clone() });
                steps.push(step);
                current = next;
            }
            Some(Site::Pair(i, j)) => {
                let (next, pair) = remove_pair(&current, &f, i, j)?;
                moves.push(BridgeMove::Pair { left: i, right: j, weight: pair[0].weight.clone() });
                steps.extend(pair);
                current = next;
            }
        }
    }
}

pub fn sym_decompose(x: &RationalMatrix) -> Result<BridgeScript> {
    Ok(sym_decompose_traced(x)?.script)
}

/// The reduced symmetric graph built from the moves [`sym_decompose`]
/// would choose for `f`, all with unit weight.
pub fn symmetric_graph_from_bap(f: &BoundedAffinePermutation) -> Result<PlabicGraph> {
    let n = f.n();
    if !is_symmetric_bap(f)? {
        return Err(Error::NotSymmetric("bounded affine permutation"));
    }
    let mut f = f.clone();
    let mut moves = Vec::new();
    let one = rational::int(1);
    while let Some(site) = symmetric_site(&f)? {
        match site {
            Site::Center(a, b) => {
                f = f.multiply_transposition(a, b)?;
                moves.push(BridgeMove::Single { left: a, right: b, weight: one.clone() });
            }
            Site::Pair(i, j) => {
                f = f.multiply_transposition(i, j)?.multiply_transposition(mirror(n, j), mirror(n, i))?;
                moves.push(BridgeMove::Pair { left: i, right: j, weight: one.clone() });
            }
        }
    }
    moves.reverse();
    let script = BridgeScript::new(f.white_fixed_points(), moves)?;
    let graph = script.realize()?.into_parts().0;
    if graph.symmetry().is_some() {
        Ok(graph)
    } else {
        graph.with_inferred_symmetry()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::KSubset;
    use crate::gallery;
    use crate::measurement::WeightedPlabicGraph;
    use crate::rational::int;

    #[test]
    fn lollipop_point_has_empty_script() {
        let x = RationalMatrix::lollipop(&KSubset::new(4, [1, 3]).unwrap());
        let s = sym_decompose(&x).unwrap();
        assert!(s.moves().is_empty());
        assert_eq!(s.base().to_string(), "1,3");
    }

    #[test]
    fn ladder_point_decomposes_into_center_pair_center() {
        let g = gallery::symmetric_ladder();
        let mut weights = vec![int(1); g.edge_count()];
        weights[4] = int(2);
        weights[6] = int(3);
        weights[7] = int(3);
        weights[10] = int(5);
        let w = WeightedPlabicGraph::new(g, weights).unwrap();
        let p = w.boundary_measurement().unwrap();
        let x = RationalMatrix::from_plucker(&p).unwrap();
        let s = sym_decompose(&x).unwrap();
        let weights: Vec<Rational> = s.moves().iter().map(|m| m.weight().clone()).collect();
        let kinds: Vec<bool> = s.moves().iter().map(|m| matches!(m, BridgeMove::Pair { .. })).collect();
        assert_eq!(kinds, vec![false, true, false]);
        assert_eq!(weights, vec![int(2), int(3), int(5)]);
        assert!(s.is_symmetric());
        assert_eq!(s.matrix().unwrap().plucker_vector().unwrap(), p);
    }

    #[test]
    fn pair_and_center_removal_on_a_symmetric_top_cell_point() {
        // Δ_14 = Δ_23 = 1, the only condition in Gr(2,4)
        let x = RationalMatrix::from_integers(4, &[&[1, 1, 0, -1], &[0, 1, 1, 1]]).unwrap();
        let (y, [first, second]) = sym_remove_pair(&x, 1, 2).unwrap();
        assert_eq!((first.left, first.right, second.left, second.right), (1, 2, 3, 4));
        assert_eq!(first.weight, second.weight);
        assert!(first.is_consistent() && second.is_consistent());
        assert!(y.plucker_vector().unwrap().is_symmetric().unwrap());
        assert!(y.is_tnn().unwrap());

        let (z, step) = sym_remove_center(&x).unwrap();
        assert_eq!((step.left, step.right), (2, 3));
        assert!(z.plucker_vector().unwrap().is_symmetric().unwrap());

        let one_one = RationalMatrix::from_integers(2, &[&[1, 1]]).unwrap();
        let (w, step) = sym_remove_center(&one_one).unwrap();
        assert_eq!(step.weight, int(1));
        assert_eq!(w, RationalMatrix::from_integers(2, &[&[1, 0]]).unwrap());
        assert!(matches!(sym_remove_center(&w), Err(Error::NoBridge { .. })));
        assert!(matches!(sym_remove_pair(&x, 2, 3), Err(Error::NoBridge { .. })));
    }

    #[test]
    fn asymmetric_inputs_are_rejected() {
        let x = RationalMatrix::from_integers(4, &[&[1, 1, 0, 0], &[0, 0, 1, 0]]).unwrap();
        assert!(matches!(sym_decompose(&x), Err(Error::NotSymmetric(_))));
        let odd = RationalMatrix::from_integers(3, &[&[1, 1, 1]]).unwrap();
        assert!(matches!(sym_decompose(&odd), Err(Error::OddGroundSet(3))));
        let f = BoundedAffinePermutation::lollipop(&KSubset::new(4, [1, 4]).unwrap());
        assert!(symmetric_graph_from_bap(&f).is_err());
    }

    #[test]
    fn symmetric_graphs_for_every_symmetric_permutation() {
        for n in [2, 4, 6] {
            for f in BoundedAffinePermutation::enumerate(n / 2, n) {
                if !is_symmetric_bap(&f).unwrap() {
                    continue;
                }
                let g = symmetric_graph_from_bap(&f).unwrap();
                assert!(g.is_reduced().unwrap(), "{f}");
                assert_eq!(g.bap().unwrap(), f);
                assert!(g.is_symmetric(), "{f}");
            }
        }
    }
}
