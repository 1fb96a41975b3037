//! Spectral operations checked against naive textbook definitions.

use sboxkit::{
    acnv, component_truth_table, coordinate_nonlinearities, coordinate_truth_table, lat,
    nonlinearity_of, random_sbox, sac, sbox_nonlinearity, walsh_transform, Rational, SBox,
    TruthTable,
};

fn parity(x: usize) -> u32 {
    (x.count_ones() & 1) as u32
}

/// The O(4^n) definition: W(a) = sum over x of (-1)^(f(x) xor <a,x>).
fn naive_walsh(bits: &[u8]) -> Vec<i32> {
    let size = bits.len();
    (0..size)
        .map(|a| {
            (0..size)
                .map(|x| {
                    if u32::from(bits[x]) ^ parity(a & x) == 0 {
                        1
                    } else {
                        -1
                    }
                })
                .sum()
        })
        .collect()
}

fn truth_table_from_index(n: u32, index: u64) -> TruthTable {
    TruthTable::new((0..1usize << n).map(|x| ((index >> x) & 1) as u8).collect())
}

#[test]
fn fast_transform_matches_naive_exhaustively_at_n3() {
    for index in 0..256u64 {
        let t = truth_table_from_index(3, index);
        assert_eq!(walsh_transform(&t).values(), naive_walsh(t.bits()));
    }
}

#[test]
fn fast_transform_matches_naive_on_random_8_variable_functions() {
    let mut state = 0x243f6a8885a308d3u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..100 {
        let bits: Vec<u8> = (0..256).map(|_| (next() & 1) as u8).collect();
        let t = TruthTable::new(bits);
        assert_eq!(walsh_transform(&t).values(), naive_walsh(t.bits()));
    }
}

#[test]
fn transform_of_linear_functions_is_a_single_spike() {
    // f(x) = <a,x> has W(a) = 2^n and zero elsewhere
    for a in 0..16usize {
        let bits: Vec<u8> = (0..16).map(|x| parity(a & x) as u8).collect();
        let spectrum = walsh_transform(&TruthTable::new(bits));
        for (mask, &value) in spectrum.values().iter().enumerate() {
            assert_eq!(value, if mask == a { 16 } else { 0 });
        }
    }
}

#[test]
fn nonlinearity_matches_textbook_values() {
    // a bent function of 4 variables reaches the maximum 2^(n-1) - 2^(n/2-1)
    let bent: Vec<u8> = (0..16)
        .map(|x: usize| (((x >> 3) & (x >> 2)) ^ ((x >> 1) & x)) as u8 & 1)
        .collect();
    assert_eq!(nonlinearity_of(&TruthTable::new(bent)), 6);
    // affine functions have nonlinearity 0
    let affine: Vec<u8> = (0..16).map(|x| parity(5 & x) as u8 ^ 1).collect();
    assert_eq!(nonlinearity_of(&TruthTable::new(affine)), 0);
}

/// LAT(a, c) = 2^(n-1) - d_H(<a,x>, <c,S(x)>), the correlation form.
fn naive_lat_entry(s: &SBox, a: usize, c: usize) -> i32 {
    let size = 1usize << s.n();
    let half = (size / 2) as i32;
    let distance: i32 = (0..size)
        .map(|x| (parity(a & x) ^ parity(c & s.dlut()[x] as usize)) as i32)
        .sum();
    half - distance
}

#[test]
fn lat_matches_hamming_definition_on_n3_samples() {
    let mut boxes = vec![SBox::identity(3)];
    for seed in 0..50 {
        boxes.push(random_sbox(3, seed).unwrap());
    }
    for s in &boxes {
        let table = lat(s);
        for c in 0..8 {
            for a in 0..8 {
                assert_eq!(table.entry(a, c), naive_lat_entry(s, a, c));
            }
        }
    }
}

#[test]
fn lat_column_zero_and_row_zero_shape() {
    let s = random_sbox(8, 77).unwrap();
    let table = lat(&s);
    // column 0 is the constant-zero component: full correlation at a = 0
    assert_eq!(table.entry(0, 0), 128);
    for a in 1..256 {
        assert_eq!(table.entry(a, 0), 0);
    }
    // row 0 of any bijective component is balanced: entry 0
    for c in 1..256 {
        assert_eq!(table.entry(0, c), 0, "component {c}");
    }
}

#[test]
fn coordinate_tables_use_msb_first_numbering() {
    let s = SBox::identity(3);
    // coordinate 1 of the identity is the most significant input bit
    let t = coordinate_truth_table(&s, 1).unwrap();
    let expected: Vec<u8> = (0..8).map(|x| ((x >> 2) & 1) as u8).collect();
    assert_eq!(t.bits(), expected);
    let t = coordinate_truth_table(&s, 3).unwrap();
    let expected: Vec<u8> = (0..8).map(|x| (x & 1) as u8).collect();
    assert_eq!(t.bits(), expected);
}

#[test]
fn components_are_xors_of_selected_coordinates() {
    let s = random_sbox(4, 4).unwrap();
    for c in 0..16u16 {
        let t = component_truth_table(&s, c);
        let expected: Vec<u8> = (0..16)
            .map(|x| parity((c & s.dlut()[x]) as usize) as u8)
            .collect();
        assert_eq!(t.bits(), expected, "component {c}");
    }
}

#[test]
fn sbox_nonlinearity_is_the_component_minimum() {
    let s = random_sbox(6, 123).unwrap();
    let direct = (1..64u16)
        .map(|c| nonlinearity_of(&component_truth_table(&s, c)))
        .min()
        .unwrap();
    assert_eq!(sbox_nonlinearity(&s), direct);
}

#[test]
fn acnv_is_the_exact_coordinate_mean() {
    let s = random_sbox(8, 5).unwrap();
    let nls = coordinate_nonlinearities(&s);
    let total: u64 = nls.iter().map(|&v| v as u64).sum();
    assert_eq!(acnv(&s), Rational::new(total, 8));
    assert_eq!(acnv(&SBox::identity(8)), Rational::new(0, 1));
}

#[test]
fn avalanche_matrix_of_identity_is_the_unit_matrix() {
    // flipping input bit i flips exactly output bit i, always
    let result = sac(&SBox::identity(4));
    for (i, row) in result.matrix.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            let expected = if i == j {
                Rational::new(1, 1)
            } else {
                Rational::new(0, 1)
            };
            assert_eq!(*cell, expected, "cell ({i}, {j})");
        }
    }
    assert_eq!(result.average, Rational::new(1, 4));
}

#[test]
fn avalanche_probabilities_count_output_flips() {
    // direct recount of matrix entry (i, j) for a random table
    let s = random_sbox(5, 99).unwrap();
    let result = sac(&s);
    let n = 5u32;
    for i in 1..=n {
        for j in 1..=n {
            let flips = (0..1usize << n)
                .filter(|&x| {
                    let y = x ^ (1 << (n - i));
                    let a = s.dlut()[x] >> (n - j) & 1;
                    let b = s.dlut()[y] >> (n - j) & 1;
                    a != b
                })
                .count() as u64;
            assert_eq!(
                result.matrix[i as usize - 1][j as usize - 1],
                Rational::new(flips, 1 << n),
                "cell ({i}, {j})"
            );
        }
    }
}
