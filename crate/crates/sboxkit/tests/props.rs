//! Property-based invariants over randomized tables and moves.

use proptest::prelude::*;
use sboxkit::{
    acnv, apply_transposition, bit_swap_inputs, component_truth_table, coordinate_nonlinearities,
    evaluate, evaluate_after_bit_swap, evaluate_coordinate, parse_sbox, random_sbox,
    sbox_nonlinearity, serialize_sbox, walsh_transform, FitnessConfig, Rational, SboxLayout,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn serialization_round_trips(n in 3u32..=8, seed in any::<u64>()) {
        let s = random_sbox(n, seed).unwrap();
        let text = serialize_sbox(&s, SboxLayout::Flat).unwrap();
        prop_assert_eq!(&parse_sbox(&text).unwrap(), &s);
        if n == 8 {
            let grid = serialize_sbox(&s, SboxLayout::Grid16).unwrap();
            prop_assert_eq!(&parse_sbox(&grid).unwrap(), &s);
        }
    }

    #[test]
    fn transpositions_are_involutive(seed in any::<u64>(), i in 0usize..256, j in 0usize..256) {
        prop_assume!(i != j);
        let s = random_sbox(8, seed).unwrap();
        let once = apply_transposition(&s, i, j).unwrap();
        prop_assert_eq!(once.dlut()[i], s.dlut()[j]);
        prop_assert_eq!(once.dlut()[j], s.dlut()[i]);
        prop_assert_eq!(&apply_transposition(&once, i, j).unwrap(), &s);
    }

    #[test]
    fn bit_swaps_are_involutive_and_inverse_consistent(
        n in 3u32..=8,
        seed in any::<u64>(),
        coordinate_index in 0u32..8,
        arm_index in 0u32..128,
    ) {
        let coordinate = coordinate_index % n + 1;
        let arm = arm_index % (1 << (n - 1));
        let s = random_sbox(n, seed).unwrap();
        let once = bit_swap_inputs(&s, coordinate, arm).unwrap();
        prop_assert_eq!(&bit_swap_inputs(&once, coordinate, arm).unwrap(), &s);
        for v in 0..(1u16 << n) {
            prop_assert_eq!(once.dlut()[once.inverse_of(v) as usize], v);
        }
    }

    #[test]
    fn acnv_lies_between_the_coordinate_extremes(seed in any::<u64>()) {
        let s = random_sbox(8, seed).unwrap();
        let nls = coordinate_nonlinearities(&s);
        let min = *nls.iter().min().unwrap() as u64;
        let max = *nls.iter().max().unwrap() as u64;
        let average = acnv(&s);
        prop_assert!(Rational::from(min) <= average);
        prop_assert!(average <= Rational::from(max));
        prop_assert!(sbox_nonlinearity(&s) as u64 <= min);
    }

    #[test]
    fn spectra_conserve_energy(seed in any::<u64>(), c in 1u16..256) {
        // Parseval: the squared spectrum of any Boolean function sums to 4^n
        let s = random_sbox(8, seed).unwrap();
        let spectrum = walsh_transform(&component_truth_table(&s, c));
        let energy: i64 = spectrum.values().iter().map(|&w| w as i64 * w as i64).sum();
        prop_assert_eq!(energy, 1i64 << 16);
    }

    #[test]
    fn incremental_fitness_equals_recomputation(
        n in 3u32..=6,
        seed in any::<u64>(),
        coordinate_index in 0u32..8,
        arm_index in 0u32..128,
        magnitude in 1u32..=6,
    ) {
        let coordinate = coordinate_index % n + 1;
        let arm = arm_index % (1 << (n - 1));
        let s = random_sbox(n, seed).unwrap();
        let cfg = FitnessConfig { magnitude };
        let fast = evaluate_after_bit_swap(&s, coordinate, arm, cfg).unwrap();
        let swapped = bit_swap_inputs(&s, coordinate, arm).unwrap();
        prop_assert_eq!(fast, evaluate_coordinate(&swapped, coordinate, cfg).unwrap());
    }

    #[test]
    fn bit_swaps_change_only_their_own_column_fitness(
        seed in any::<u64>(),
        coordinate_index in 0u32..8,
        arm in 0u32..128,
    ) {
        let coordinate = coordinate_index + 1;
        let s = random_sbox(8, seed).unwrap();
        let cfg = FitnessConfig { magnitude: 3 };
        let swapped = bit_swap_inputs(&s, coordinate, arm).unwrap();
        for other in 1..=8u32 {
            if other == coordinate {
                continue;
            }
            prop_assert_eq!(
                evaluate_coordinate(&s, other, cfg).unwrap(),
                evaluate_coordinate(&swapped, other, cfg).unwrap()
            );
        }
    }

    #[test]
    fn full_fitness_is_the_column_sum(n in 3u32..=8, seed in any::<u64>(), magnitude in 1u32..=8) {
        let s = random_sbox(n, seed).unwrap();
        let cfg = FitnessConfig { magnitude };
        let total: u128 = (1..=n)
            .map(|j| evaluate_coordinate(&s, j, cfg).unwrap().total())
            .sum();
        prop_assert_eq!(evaluate(&s, cfg).unwrap().total(), total);
    }
}
