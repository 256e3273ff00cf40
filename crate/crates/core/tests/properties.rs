mod common;

use positroid::combinatorics::{is_symmetric_bap, mirror};
use positroid::rational::{self, ratio};
use positroid::{
    BoundedAffinePermutation, BridgeScript, DualGrassmannNecklace, GrassmannNecklace, KSubset, PluckerVector,
    Positroid, RationalMatrix,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn any_bap() -> impl Strategy<Value = BoundedAffinePermutation> {
    (1usize..=5).prop_flat_map(|n| {
        let all = BoundedAffinePermutation::enumerate_all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn script(seed: u64) -> BridgeScript {
    common::random_script(&mut ChaCha8Rng::seed_from_u64(seed))
}

fn symmetric_script(seed: u64) -> BridgeScript {
    common::random_symmetric_script(&mut ChaCha8Rng::seed_from_u64(seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_text_round_trip(p in -1000i64..1000, q in 1i64..1000) {
        let x = ratio(p, q);
        prop_assert_eq!(rational::parse(&rational::format(&x)).unwrap(), x);
    }

    #[test]
    fn subset_text_round_trip(n in 1usize..=8, mask in any::<u8>()) {
        let s = KSubset::new(n, (1..=n).filter(|i| mask & (1 << (i - 1)) != 0)).unwrap();
        prop_assert_eq!(KSubset::parse(n, &s.to_string()).unwrap(), s);
    }

    #[test]
    fn necklaces_round_trip(f in any_bap()) {
        let necklace = GrassmannNecklace::from_bap(&f);
        prop_assert_eq!(necklace.to_bap().unwrap(), f.clone());
        prop_assert_eq!(DualGrassmannNecklace::from_bap(&f).to_bap().unwrap(), f.clone());
        prop_assert_eq!(BoundedAffinePermutation::parse(&f.to_string()).unwrap(), f.clone());
        let m = Positroid::from_necklace(&necklace);
        prop_assert!(m.contains(necklace.term(1)));
        prop_assert_eq!(m.necklace().unwrap(), necklace);
    }

    #[test]
    fn bridges_add_and_remove(f in any_bap()) {
        for (l, r) in f.addable_bridges() {
            let g = f.multiply_transposition(l, r).unwrap();
            prop_assert!(g.has_bridge_between(l, r).unwrap());
            prop_assert_eq!(g.multiply_transposition(l, r).unwrap(), f.clone());
        }
        for (l, r) in f.removable_bridges() {
            prop_assert!(f.multiply_transposition(l, r).unwrap().can_add_bridge(l, r));
        }
    }

    #[test]
    fn script_realizations_are_reduced_with_the_replayed_permutation(seed in any::<u64>()) {
        let s = script(seed);
        let w = s.realize().unwrap();
        prop_assert!(w.graph().validate().is_empty());
        prop_assert!(w.graph().is_reduced().unwrap());
        prop_assert_eq!(w.graph().bap().unwrap(), s.permutation().unwrap());
        prop_assert_eq!(s.matrix().unwrap().bap().unwrap(), s.permutation().unwrap());
        prop_assert!(s.matrix().unwrap().is_tnn().unwrap());
        prop_assert_eq!(BridgeScript::parse(&s.to_text()).unwrap(), s);
    }

    #[test]
    fn symmetric_scripts_give_symmetric_points(seed in any::<u64>()) {
        let s = symmetric_script(seed);
        prop_assert!(s.is_symmetric());
        let p = s.matrix().unwrap().plucker_vector().unwrap();
        prop_assert!(p.is_symmetric().unwrap());
        prop_assert!(is_symmetric_bap(&s.permutation().unwrap()).unwrap());
        let w = s.realize().unwrap();
        prop_assert!(w.graph().symmetry().is_some());
        prop_assert!(w.is_symmetric_weighting().unwrap());
    }

    #[test]
    fn reflection_is_an_involution_on_symmetric_graphs(seed in any::<u64>()) {
        let g = symmetric_script(seed).realize().unwrap().into_parts().0;
        let n = g.boundary_count();
        let twice = g.reflect().unwrap().reflect().unwrap();
        prop_assert_eq!(twice.trip_permutation().unwrap(), g.trip_permutation().unwrap());
        let bar = g.trip_permutation().unwrap();
        let mirrored = g.reflect().unwrap().trip_permutation().unwrap();
        for a in 1..=n {
            prop_assert_eq!(mirrored[a - 1], mirror(n, bar[mirror(n, a) - 1]));
        }
    }

    #[test]
    fn gauge_moves_fix_the_point(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = common::random_script(&mut rng).realize().unwrap();
        let moved = common::scramble(&w, 5, &mut rng);
        prop_assert_eq!(moved.boundary_measurement().unwrap(), w.boundary_measurement().unwrap());
    }

    #[test]
    fn text_formats_round_trip(seed in any::<u64>()) {
        let x = script(seed).matrix().unwrap();
        prop_assert_eq!(RationalMatrix::parse(&x.to_text()).unwrap(), x.clone());
        let p = x.plucker_vector().unwrap();
        prop_assert_eq!(PluckerVector::parse(p.n(), &p.to_text()).unwrap(), p.clone());
        prop_assert_eq!(RationalMatrix::from_plucker(&p).unwrap().plucker_vector().unwrap(), p);
    }
}
