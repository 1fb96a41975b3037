use sboxkit::{
    bit_swap_inputs, evaluate, evaluate_after_bit_swap, evaluate_coordinate, lat, random_sbox,
    Error, FitnessConfig, SBox,
};

#[test]
fn identity_fixture_at_magnitude_10() {
    // each coordinate of the identity is linear: one spectrum spike of 2^8,
    // so each column contributes (2^7)^10 and the total is 8 * 2^70 = 2^73
    let e = evaluate(&SBox::identity(8), FitnessConfig { magnitude: 10 }).unwrap();
    assert_eq!(e.total(), 1u128 << 73);
}

#[test]
fn magnitude_2_total_is_forced_by_energy_conservation() {
    // sum of squared spectrum values is always 4^n, so E at M = 2 is
    // n * 4^n / 4 regardless of the table
    for seed in 0..10 {
        let s = random_sbox(8, seed).unwrap();
        let e = evaluate(&s, FitnessConfig { magnitude: 2 }).unwrap();
        assert_eq!(e.total(), 8 * (1u128 << 14));
    }
    let e = evaluate(&SBox::identity(3), FitnessConfig { magnitude: 2 }).unwrap();
    assert_eq!(e.total(), 48);
}

#[test]
fn magnitude_1_total_matches_direct_lat_sum() {
    let s = random_sbox(8, 21).unwrap();
    let table = lat(&s);
    let mut direct = 0u128;
    for j in 0..8u32 {
        let c = 1usize << (7 - j);
        for a in 0..256 {
            direct += table.entry(a, c).unsigned_abs() as u128;
        }
    }
    let e = evaluate(&s, FitnessConfig { magnitude: 1 }).unwrap();
    assert_eq!(e.total(), direct);
}

#[test]
fn coordinate_totals_sum_to_the_full_fitness() {
    let s = random_sbox(8, 8).unwrap();
    let cfg = FitnessConfig { magnitude: 10 };
    let total: u128 = (1..=8)
        .map(|j| evaluate_coordinate(&s, j, cfg).unwrap().total())
        .sum();
    assert_eq!(evaluate(&s, cfg).unwrap().total(), total);
}

#[test]
fn coordinate_out_of_range_is_reported() {
    let s = SBox::identity(4);
    let cfg = FitnessConfig::default();
    assert!(matches!(
        evaluate_coordinate(&s, 0, cfg),
        Err(Error::CoordinateOutOfRange { coordinate: 0, n: 4 })
    ));
    assert!(matches!(
        evaluate_coordinate(&s, 5, cfg),
        Err(Error::CoordinateOutOfRange { coordinate: 5, n: 4 })
    ));
}

#[test]
fn overflow_budget_is_enforced() {
    // at M = 10 the exact accumulator provably fits through n = 12 and is
    // rejected at n = 13 before any work happens
    let cfg = FitnessConfig { magnitude: 10 };
    assert!(evaluate(&SBox::identity(12), cfg).is_ok());
    assert!(matches!(
        evaluate(&SBox::identity(13), cfg),
        Err(Error::FitnessOverflow { n: 13, magnitude: 10 })
    ));
}

#[test]
fn incremental_swap_evaluation_matches_recomputation() {
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let cfg = FitnessConfig { magnitude: 10 };
    for round in 0..50 {
        let s = random_sbox(8, round).unwrap();
        let j = (next() % 8 + 1) as u32;
        let arm = (next() % 128) as u32;
        let fast = evaluate_after_bit_swap(&s, j, arm, cfg).unwrap();
        let swapped = bit_swap_inputs(&s, j, arm).unwrap();
        let full = evaluate_coordinate(&swapped, j, cfg).unwrap();
        assert_eq!(fast, full, "coordinate {j} arm {arm}");
    }
}

#[test]
fn incremental_swap_evaluation_exhaustive_at_n3() {
    let cfg = FitnessConfig { magnitude: 4 };
    for seed in 0..20 {
        let s = random_sbox(3, seed).unwrap();
        for j in 1..=3u32 {
            for arm in 0..4u32 {
                let fast = evaluate_after_bit_swap(&s, j, arm, cfg).unwrap();
                let swapped = bit_swap_inputs(&s, j, arm).unwrap();
                let full = evaluate_coordinate(&swapped, j, cfg).unwrap();
                assert_eq!(fast, full, "seed {seed} coordinate {j} arm {arm}");
            }
        }
    }
}

#[test]
fn fitness_values_order_and_display() {
    let cfg = FitnessConfig { magnitude: 10 };
    let weak = evaluate(&SBox::identity(8), cfg).unwrap();
    let strong = evaluate(&random_sbox(8, 2).unwrap(), cfg).unwrap();
    assert!(strong < weak, "a random table beats the linear identity");
    assert_eq!(weak.to_string(), (1u128 << 73).to_string());
}
