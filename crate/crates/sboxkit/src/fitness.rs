//! The magnitude-weighted fitness E(S) over coordinate LAT columns.
//!
//! `E(S)` sums `|entry|^M` over the n lookup-table columns that correspond
//! to single coordinates (output masks `2^0 .. 2^{n-1}`), every row
//! included. Large linear biases are penalized super-linearly, so driving
//! the sum down drives the worst bias down. Accumulation is exact 128-bit
//! integer arithmetic with checked operations.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::sbox::{arm_targets, SBox};
use crate::spectral::{coordinate_truth_table, walsh_transform};

/// An exact fitness total. Lower is better.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FitnessValue {
    total: u128,
}

impl FitnessValue {
    /// The raw 128-bit total.
    pub fn total(&self) -> u128 {
        self.total
    }
}

impl fmt::Display for FitnessValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.total.fmt(f)
    }
}

impl Serialize for FitnessValue {
    // JSON numbers cannot hold u128; a decimal string is lossless.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.total.to_string())
    }
}

impl<'de> Deserialize<'de> for FitnessValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        let total = text.parse().map_err(D::Error::custom)?;
        Ok(FitnessValue { total })
    }
}

/// Fitness parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FitnessConfig {
    /// The exponent M applied to every absolute table entry. Must be >= 1.
    pub magnitude: u32,
}

impl Default for FitnessConfig {
    fn default() -> Self {
        FitnessConfig { magnitude: 10 }
    }
}

/// Precomputed `k^M` for every possible absolute LAT entry `k` of an n-bit
/// coordinate (`0 ..= 2^{n-1}`). Shared by the optimizers' hot loops.
#[derive(Debug, Clone)]
pub(crate) struct PowTable {
    powers: Vec<u128>,
}

impl PowTable {
    pub(crate) fn build(n: u32, cfg: FitnessConfig) -> Result<Self, Error> {
        assert!(cfg.magnitude >= 1, "fitness magnitude must be >= 1");
        let half = 1u64 << (n - 1);
        // headroom so that 2^n * n terms of the largest power still fit
        let budget = n + n.ilog2() + 1;
        let powers = (0..=half)
            .map(|k| {
                (k as u128)
                    .checked_pow(cfg.magnitude)
                    .filter(|p| p.leading_zeros() > budget)
                    .ok_or(Error::FitnessOverflow {
                        n,
                        magnitude: cfg.magnitude,
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PowTable { powers })
    }

    #[inline]
    pub(crate) fn of_walsh(&self, w: i32) -> u128 {
        self.powers[(w.unsigned_abs() / 2) as usize]
    }

    pub(crate) fn column_total(&self, values: &[i32]) -> u128 {
        values.iter().map(|&w| self.of_walsh(w)).sum()
    }
}

/// Evaluates E(S): the sum of every coordinate's column fitness.
///
/// ```
/// use sboxkit::{evaluate, FitnessConfig, SBox};
///
/// // Each identity coordinate is linear: one table entry of 128, rest 0.
/// let e = evaluate(&SBox::identity(8), FitnessConfig::default()).unwrap();
/// assert_eq!(e.total(), 1 << 73); // 8 * 128^10
/// ```
pub fn evaluate(s: &SBox, cfg: FitnessConfig) -> Result<FitnessValue, Error> {
    let pow = PowTable::build(s.n(), cfg)?;
    let mut total = 0u128;
    for j in 1..=s.n() {
        let spectrum = walsh_transform(&coordinate_truth_table(s, j).expect("j in range"));
        total = total
            .checked_add(pow.column_total(spectrum.values()))
            .ok_or(Error::FitnessOverflow {
                n: s.n(),
                magnitude: cfg.magnitude,
            })?;
    }
    Ok(FitnessValue { total })
}

/// Evaluates one coordinate's column: `sum of |entry|^M` over the rows of
/// the table column describing coordinate j.
pub fn evaluate_coordinate(s: &SBox, j: u32, cfg: FitnessConfig) -> Result<FitnessValue, Error> {
    let spectrum = walsh_transform(&coordinate_truth_table(s, j)?);
    let pow = PowTable::build(s.n(), cfg)?;
    Ok(FitnessValue {
        total: pow.column_total(spectrum.values()),
    })
}

/// Walsh spectrum sum after flipping the truth-table bits at `x0` (0 to 1)
/// and `x1` (1 to 0): each spectrum value moves by 0 or +-4 depending on the
/// parities of `a & x0` and `a & x1`, and only rows with an odd parity of
/// `a & (x0 ^ x1)` change at all.
pub(crate) fn column_total_after_two_point(
    values: &[i32],
    x0: usize,
    x1: usize,
    pow: &PowTable,
) -> u128 {
    let mut total = 0u128;
    for (a, &w) in values.iter().enumerate() {
        total += pow.of_walsh(w + two_point_delta(a, x0, x1));
    }
    total
}

/// The change to spectrum row `a` when truth bit `x0` flips 0->1 and truth
/// bit `x1` flips 1->0.
#[inline]
pub(crate) fn two_point_delta(a: usize, x0: usize, x1: usize) -> i32 {
    let s0 = 1 - 2 * ((a & x0).count_ones() & 1) as i32; // (-1)^<a,x0>
    let s1 = 1 - 2 * ((a & x1).count_ones() & 1) as i32;
    2 * (s1 - s0)
}

/// Fitness of coordinate `j` after the `(j, arm)` bit-swap move, via a
/// two-point spectrum update instead of a full transform of the moved table.
///
/// Bit-exact equal to `evaluate_coordinate(&bit_swap_inputs(s, j, arm)?, j,
/// cfg)`.
pub fn evaluate_after_bit_swap(
    s: &SBox,
    j: u32,
    arm: u32,
    cfg: FitnessConfig,
) -> Result<FitnessValue, Error> {
    if j == 0 || j > s.n() {
        return Err(Error::CoordinateOutOfRange {
            coordinate: j,
            n: s.n(),
        });
    }
    if arm >= 1 << (s.n() - 1) {
        return Err(Error::ArmOutOfRange { arm, n: s.n() });
    }
    let spectrum = walsh_transform(&coordinate_truth_table(s, j).expect("j in range"));
    let pow = PowTable::build(s.n(), cfg)?;
    let (v0, v1) = arm_targets(s.n(), j, arm);
    // x0 currently outputs v0, whose coordinate-j bit is 0; after the swap
    // it outputs v1, so truth bit x0 rises and truth bit x1 falls.
    let x0 = s.inverse_of(v0) as usize;
    let x1 = s.inverse_of(v1) as usize;
    Ok(FitnessValue {
        total: column_total_after_two_point(spectrum.values(), x0, x1, &pow),
    })
}

pub(crate) fn fitness_value(total: u128) -> FitnessValue {
    FitnessValue { total }
}
