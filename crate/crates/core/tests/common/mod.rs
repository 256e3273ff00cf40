#![allow(dead_code)]

use positroid::combinatorics::mirror;
use positroid::rational::ratio;
use positroid::{BoundedAffinePermutation, BridgeMove, BridgeScript, KSubset, Rational, VertexId, WeightedPlabicGraph};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const MAX_BOUNDARY: usize = 6;
pub const MAX_WEIGHT_PART: i64 = 10;
pub const MAX_MOVES: usize = 8;

pub fn weight(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.gen_range(1..=MAX_WEIGHT_PART), rng.gen_range(1..=MAX_WEIGHT_PART))
}

/// Random base, then a random number of bridges each chosen uniformly among
/// those addable at that point.
pub fn random_script(rng: &mut ChaCha8Rng) -> BridgeScript {
    let n = rng.gen_range(1..=MAX_BOUNDARY);
    let base = KSubset::new(n, (1..=n).filter(|_| rng.gen_bool(0.5))).unwrap();
    let mut f = BoundedAffinePermutation::lollipop(&base);
    let mut moves = Vec::new();
    for _ in 0..rng.gen_range(0..=MAX_MOVES) {
        let Some(&(left, right)) = f.addable_bridges().choose(rng) else {
            break;
        };
        f = f.multiply_transposition(left, right).unwrap();
        moves.push(BridgeMove::Single { left, right, weight: weight(rng) });
    }
    BridgeScript::new(base, moves).unwrap()
}

fn pair_addable(f: &BoundedAffinePermutation, left: usize, right: usize) -> bool {
    let n = f.n();
    let (ml, mr) = (mirror(n, right), mirror(n, left));
    if right >= ml || !f.can_add_bridge(ml, mr) {
        return false;
    }
    f.multiply_transposition(ml, mr).unwrap().can_add_bridge(left, right)
}

/// Symmetric base (one white end per mirrored pair), then centred bridges
/// and mirrored pairs.
pub fn random_symmetric_script(rng: &mut ChaCha8Rng) -> BridgeScript {
    let n = 2 * rng.gen_range(1..=MAX_BOUNDARY / 2);
    let base = KSubset::new(n, (1..=n / 2).map(|i| if rng.gen_bool(0.5) { i } else { mirror(n, i) })).unwrap();
    let mut f = BoundedAffinePermutation::lollipop(&base);
    let mut moves = Vec::new();
    for _ in 0..rng.gen_range(0..=MAX_MOVES) {
        let mut options = Vec::new();
        for left in 1..n {
            for right in (left + 1)..=n {
                if left + right == n + 1 && f.can_add_bridge(left, right) {
                    options.push((false, left, right));
                }
                if pair_addable(&f, left, right) {
                    options.push((true, left, right));
                }
            }
        }
        let Some(&(pair, left, right)) = options.choose(rng) else {
            break;
        };
        let w = weight(rng);
        let mv = if pair {
            BridgeMove::Pair { left, right, weight: w }
        } else {
            BridgeMove::Single { left, right, weight: w }
        };
        for (l, r) in mv.bridges(n) {
            f = f.multiply_transposition(l, r).unwrap();
        }
        moves.push(mv);
    }
    BridgeScript::new(base, moves).unwrap()
}

/// Gauge moves at random interior vertices with random positive factors.
pub fn scramble(w: &WeightedPlabicGraph, moves: usize, rng: &mut ChaCha8Rng) -> WeightedPlabicGraph {
    let interior: Vec<VertexId> = w.graph().interior_vertices().collect();
    let mut out = w.clone();
    if interior.is_empty() {
        return out;
    }
    for _ in 0..moves {
        let v = *interior.choose(rng).unwrap();
        out = out.gauge(v, &weight(rng)).unwrap();
    }
    out
}
