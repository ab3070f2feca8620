//! Randomized invariants over the core types.

use proptest::prelude::*;

use tscodes::metrics::{
    decoding_equivalent, is_ts_ball, metrize_by_rank, two_level_weight, Equivalence,
    TsBallVerdict, WeightTable,
};
use tscodes::tilings::{complete_tiling, verify_tiling};
use tscodes::{BitVector, VectorSet};

fn downward_closure(n: u8, seeds: &[u32]) -> VectorSet {
    let mut masks = vec![0u32];
    for &seed in seeds {
        let m = seed & ((1u32 << n) - 1);
        let mut sub = m;
        loop {
            masks.push(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & m;
        }
    }
    VectorSet::from_masks(n, masks).unwrap()
}

fn arb_downset() -> impl Strategy<Value = VectorSet> {
    (1u8..=5, proptest::collection::vec(any::<u32>(), 0..4))
        .prop_map(|(n, seeds)| downward_closure(n, &seeds))
}

fn arb_table() -> impl Strategy<Value = WeightTable> {
    (1u8..=5).prop_flat_map(|n| {
        proptest::collection::vec(1u32..=8, (1usize << n) - 1).prop_map(move |tail| {
            let mut values = vec![0u32];
            values.extend(tail);
            WeightTable::from_raw(n, values).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn vector_addition_group_laws(a in 0u32..32, b in 0u32..32) {
        let x = BitVector::new(5, a).unwrap();
        let y = BitVector::new(5, b).unwrap();
        prop_assert_eq!(x.add(&x).unwrap(), BitVector::zero(5).unwrap());
        prop_assert_eq!(x.add(&y).unwrap(), y.add(&x).unwrap());
        prop_assert!(x.add(&y).unwrap().weight() <= x.weight() + y.weight());
    }

    #[test]
    fn text_form_round_trips(a in 0u32..256) {
        let x = BitVector::new(8, a).unwrap();
        let back: BitVector = x.to_string().parse().unwrap();
        prop_assert_eq!(x, back);
    }

    #[test]
    fn canonical_form_is_orbit_invariant(d in arb_downset(), perm_seed in any::<u64>()) {
        let n = d.dim() as usize;
        let mut perm: Vec<usize> = (0..n).collect();
        // cheap seeded shuffle
        let mut state = perm_seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let image = d.apply_permutation(&perm).unwrap();
        prop_assert_eq!(d.canonical_form().unwrap(), image.canonical_form().unwrap());
    }

    #[test]
    fn downsets_are_ts_balls_with_round_trip(d in arb_downset()) {
        match is_ts_ball(&d).unwrap() {
            TsBallVerdict::Yes { weight, radius } => {
                prop_assert_eq!(weight.ball(&BitVector::zero(d.dim()).unwrap(), radius).unwrap(), d);
            }
            TsBallVerdict::No { .. } => prop_assert!(false, "downward-closed set rejected"),
        }
    }

    #[test]
    fn two_level_weight_is_ts(d in arb_downset()) {
        let w = two_level_weight(&d).unwrap();
        prop_assert!(w.validate().is_ts());
    }

    #[test]
    fn completion_output_verifies(d in arb_downset()) {
        let n = d.dim();
        if let Some(code) = complete_tiling(n, &d).unwrap() {
            prop_assert!(verify_tiling(n, &d, &code).unwrap().is_valid());
            prop_assert!(code.contains_mask(0));
        }
    }

    #[test]
    fn metrization_is_idempotent_up_to_equivalence(w in arb_table()) {
        let once = metrize_by_rank(&w).unwrap();
        let twice = metrize_by_rank(&once).unwrap();
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(decoding_equivalent(&w, &once).unwrap(), Equivalence::Equivalent);
        prop_assert!(once.validate().is_valid_weight());
    }

    #[test]
    fn metrization_preserves_sub_level_sets(w in arb_table(), r in 0u32..10) {
        let ranked = metrize_by_rank(&w).unwrap();
        let n = w.dim();
        let original: Vec<u32> = (0..1u32 << n).filter(|&m| w.get(m) <= r).collect();
        // the rank map sends the sub-level set at r to one at some r'
        let r2 = original.iter().map(|&m| ranked.get(m)).max().unwrap_or(0);
        let image: Vec<u32> = (0..1u32 << n).filter(|&m| ranked.get(m) <= r2).collect();
        prop_assert_eq!(original, image);
    }

    #[test]
    fn balls_grow_with_radius(w in arb_table(), r in 0u32..8) {
        let z = BitVector::zero(w.dim()).unwrap();
        let small = w.ball(&z, r).unwrap();
        let large = w.ball(&z, r + 1).unwrap();
        for m in small.masks() {
            prop_assert!(large.contains_mask(m));
        }
    }
}
