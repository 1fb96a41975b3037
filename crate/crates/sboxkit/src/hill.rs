//! Stochastic hill climbing over random transpositions.
//!
//! Each step swaps two random lookup-table entries outside the frozen
//! prefix and keeps the swap only when the fitness E(S) strictly drops. The
//! run stops after a configured number of consecutive rejections: once every
//! recent proposal failed, the neighborhood is (probabilistically) exhausted.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::fitness::{
    column_total_after_two_point, fitness_value, two_point_delta, FitnessConfig, FitnessValue,
    PowTable,
};
use crate::sbox::{FrozenPrefix, SBox};
use crate::spectral::{coordinate_truth_table, walsh_transform, MetricsSummary};

/// Parameters for [`hill_climb`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HillClimbConfig {
    /// Fitness exponent M.
    pub magnitude: u32,
    /// Leading entries pinned to the starting table.
    pub freeze: FrozenPrefix,
    /// Consecutive rejections before stopping. `None` selects the default
    /// N(N-1)/4 with N = 2^n, the number of unordered entry pairs halved.
    pub max_stall: Option<u64>,
    /// Seed for the run's deterministic random stream.
    pub seed: u64,
    /// Optional hard cap on total proposals.
    pub max_iterations: Option<u64>,
}

impl Default for HillClimbConfig {
    fn default() -> Self {
        HillClimbConfig {
            magnitude: 10,
            freeze: FrozenPrefix::default(),
            max_stall: None,
            seed: 0,
            max_iterations: None,
        }
    }
}

/// The default stall bound for an n-bit S-box: N(N-1)/4 with N = 2^n.
pub fn default_hill_stall(n: u32) -> u64 {
    let count = 1u64 << n;
    count * (count - 1) / 4
}

/// Record of one optimization run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunTrace {
    /// Total proposals made.
    pub iterations: u64,
    /// Accepted proposals.
    pub accepted: u64,
    /// `(iteration, fitness)` at the start (iteration 0) and after every
    /// accepted move; strictly decreasing in fitness.
    pub fitness_history: Vec<(u64, FitnessValue)>,
    /// The optimized S-box.
    pub final_sbox: SBox,
    /// Spectral summary of `final_sbox`.
    pub final_metrics: MetricsSummary,
}

/// A uniformly random bijective S-box from a seeded Fisher-Yates shuffle.
///
/// The same `(n, seed)` always produces the same table.
///
/// ```
/// use sboxkit::random_sbox;
///
/// let a = random_sbox(8, 1).unwrap();
/// assert_eq!(a, random_sbox(8, 1).unwrap());
/// ```
pub fn random_sbox(n: u32, seed: u64) -> Result<SBox, Error> {
    if !(3..=16).contains(&n) {
        return Err(Error::UnsupportedDimension { n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut dlut: Vec<u16> = (0..1u32 << n).map(|v| v as u16).collect();
    for i in (1..dlut.len()).rev() {
        let j = rng.gen_range(0..=i);
        dlut.swap(i, j);
    }
    Ok(SBox::new(dlut).expect("shuffle preserves the permutation"))
}

/// Working spectral state for one run: the spectrum and fitness total of
/// every coordinate column, updated incrementally per accepted move.
struct Columns {
    n: u32,
    spectra: Vec<Vec<i32>>,
    totals: Vec<u128>,
}

impl Columns {
    fn build(s: &SBox, pow: &PowTable) -> Self {
        let spectra: Vec<Vec<i32>> = (1..=s.n())
            .map(|j| {
                walsh_transform(&coordinate_truth_table(s, j).expect("j in range"))
                    .values()
                    .to_vec()
            })
            .collect();
        let totals = spectra.iter().map(|sp| pow.column_total(sp)).collect();
        Columns {
            n: s.n(),
            spectra,
            totals,
        }
    }

    fn grand_total(&self) -> u128 {
        self.totals.iter().sum()
    }

    /// Truth-table flip positions for coordinate `j` when the outputs at
    /// inputs `i` and `k` trade places and their bit-j values differ: `u`
    /// (the output at `i`) tells which position currently holds the 0 bit,
    /// and that position rises.
    fn flip_positions(n: u32, j: u32, i: usize, k: usize, u: u16) -> (usize, usize) {
        if (u >> (n - j)) & 1 == 0 {
            (i, k)
        } else {
            (k, i)
        }
    }

    /// Fitness total if the transposition `(i, k)` were applied.
    fn total_after_swap(&self, i: usize, k: usize, u: u16, w: u16, pow: &PowTable) -> u128 {
        let mut total = 0u128;
        for (idx, spectrum) in self.spectra.iter().enumerate() {
            let j = idx as u32 + 1;
            if (u ^ w) >> (self.n - j) & 1 == 0 {
                total += self.totals[idx];
            } else {
                let (x0, x1) = Self::flip_positions(self.n, j, i, k, u);
                total += column_total_after_two_point(spectrum, x0, x1, pow);
            }
        }
        total
    }

    /// Applies the transposition to the cached spectra and totals.
    fn commit_swap(&mut self, i: usize, k: usize, u: u16, w: u16, pow: &PowTable) {
        for idx in 0..self.spectra.len() {
            let j = idx as u32 + 1;
            if (u ^ w) >> (self.n - j) & 1 == 0 {
                continue;
            }
            let (x0, x1) = Self::flip_positions(self.n, j, i, k, u);
            let spectrum = &mut self.spectra[idx];
            for (a, value) in spectrum.iter_mut().enumerate() {
                *value += two_point_delta(a, x0, x1);
            }
            self.totals[idx] = pow.column_total(spectrum);
        }
    }
}

/// Runs Algorithm-1-style hill climbing from `start`.
///
/// Proposals are uniform over unordered pairs of distinct mutable indexes
/// (at or past `cfg.freeze.k`); a proposal is accepted only when E strictly
/// decreases. Identical `(start, cfg)` reproduce the identical trace.
///
/// ```
/// use sboxkit::{hill_climb, HillClimbConfig, random_sbox};
///
/// let start = random_sbox(8, 7).unwrap();
/// let cfg = HillClimbConfig {
///     max_stall: Some(50), // a toy budget; the default is N(N-1)/4
///     ..HillClimbConfig::default()
/// };
/// let trace = hill_climb(&start, &cfg).unwrap();
/// assert!(trace.fitness_history.last().unwrap().1 <= trace.fitness_history[0].1);
/// ```
pub fn hill_climb(start: &SBox, cfg: &HillClimbConfig) -> Result<RunTrace, Error> {
    let n = start.n();
    let size = 1usize << n;
    if cfg.freeze.k + 2 > size {
        return Err(Error::DegenerateFreeze {
            k: cfg.freeze.k,
            n,
        });
    }
    let fitness_cfg = FitnessConfig {
        magnitude: cfg.magnitude,
    };
    let pow = PowTable::build(n, fitness_cfg)?;
    let max_stall = cfg.max_stall.unwrap_or_else(|| default_hill_stall(n));
    assert!(max_stall >= 1, "max_stall must be >= 1");

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut dlut = start.dlut().to_vec();
    let mut columns = Columns::build(start, &pow);
    let mut current = columns.grand_total();

    let mut iterations = 0u64;
    let mut accepted = 0u64;
    let mut stall = 0u64;
    let mut fitness_history = vec![(0, fitness_value(current))];

    while stall < max_stall && Some(iterations) != cfg.max_iterations {
        iterations += 1;
        // uniform unordered pair of distinct mutable indexes
        let i = rng.gen_range(cfg.freeze.k..size);
        let mut k = rng.gen_range(cfg.freeze.k..size - 1);
        if k >= i {
            k += 1;
        }
        let (u, w) = (dlut[i], dlut[k]);
        let candidate = columns.total_after_swap(i, k, u, w, &pow);
        if candidate < current {
            columns.commit_swap(i, k, u, w, &pow);
            dlut.swap(i, k);
            current = candidate;
            accepted += 1;
            stall = 0;
            fitness_history.push((iterations, fitness_value(current)));
        } else {
            stall += 1;
        }
    }

    let final_sbox = SBox::new(dlut).expect("transpositions preserve the permutation");
    let final_metrics = MetricsSummary::compute(&final_sbox);
    Ok(RunTrace {
        iterations,
        accepted,
        fitness_history,
        final_sbox,
        final_metrics,
    })
}
