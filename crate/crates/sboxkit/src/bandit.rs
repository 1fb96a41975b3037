//! The multi-armed-bandit reformulation of coordinate optimization.
//!
//! An n-bit S-box becomes n bandits, one per output coordinate. Each bandit
//! exposes `2^{n-1}` arms; arm `b` of bandit `j` swaps the two outputs whose
//! values differ only in bit j (the missing bit of the pattern `b`). Such a
//! swap rewrites two truth-table bits of coordinate j and leaves every other
//! coordinate's truth table untouched, so each bandit's state can be tracked
//! independently. The strategy always plays the weakest bandit: the one with
//! the lowest coordinate nonlinearity.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::fitness::{
    column_total_after_two_point, fitness_value, two_point_delta, FitnessConfig, FitnessValue,
    PowTable,
};
use crate::hill::RunTrace;
use crate::sbox::{arm_targets, bit_swap_inputs, FrozenPrefix, SBox};
use crate::spectral::{
    coordinate_truth_table, nonlinearity_of_spectrum, walsh_transform, MetricsSummary,
    WalshSpectrum,
};

/// Cached state of one coordinate, kept current across activations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bandit {
    /// Nonlinearity of this coordinate function.
    pub coordinate_nl: u32,
    /// Fitness of this coordinate's table column.
    pub coordinate_fitness: FitnessValue,
    /// Walsh spectrum of this coordinate function.
    pub spectrum: WalshSpectrum,
}

/// The working S-box together with the per-coordinate bandit caches.
#[derive(Debug, Clone)]
pub struct BanditModel {
    sbox: SBox,
    bandits: Vec<Bandit>,
    magnitude: u32,
    pow: PowTable,
}

impl PartialEq for BanditModel {
    fn eq(&self, other: &Self) -> bool {
        self.sbox == other.sbox
            && self.bandits == other.bandits
            && self.magnitude == other.magnitude
    }
}

/// Parameters for [`bandit_optimize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BanditConfig {
    /// Fitness exponent M.
    pub magnitude: u32,
    /// Seed for the run's deterministic random stream.
    pub seed: u64,
    /// Consecutive unsuccessful activations before stopping. `None` selects
    /// the default n * 2^{n-1}, one expected visit per arm.
    pub max_stall: Option<u64>,
    /// Leading entries pinned to the starting table. Arms that would move a
    /// frozen entry are never proposed and never count toward the stall
    /// budget; freezing is an extension over the plain algorithm.
    pub freeze: FrozenPrefix,
}

impl Default for BanditConfig {
    fn default() -> Self {
        BanditConfig {
            magnitude: 10,
            seed: 0,
            max_stall: None,
            freeze: FrozenPrefix::default(),
        }
    }
}

/// The default stall bound for an n-bit model: n * 2^{n-1}, the total arm
/// count over all bandits.
pub fn default_bandit_stall(n: u32) -> u64 {
    n as u64 * (1u64 << (n - 1))
}

impl BanditModel {
    /// The working S-box in its current state.
    pub fn sbox(&self) -> &SBox {
        &self.sbox
    }

    /// The bandit cache for coordinate `j` (1 = most significant).
    pub fn bandit(&self, j: u32) -> &Bandit {
        &self.bandits[j as usize - 1]
    }

    /// All bandits, coordinate order.
    pub fn bandits(&self) -> &[Bandit] {
        &self.bandits
    }

    /// The fitness exponent the model caches were built with.
    pub fn magnitude(&self) -> u32 {
        self.magnitude
    }

    /// Arm count per bandit: `2^{n-1}`.
    pub fn arms_per_bandit(&self) -> u32 {
        1 << (self.sbox.n() - 1)
    }

    /// Plays arm `arm` of bandit `coordinate`: the move is kept only when
    /// that coordinate's fitness strictly decreases, and the return value
    /// says whether it was. A rejected activation leaves the model
    /// bit-identical to before.
    pub fn activate(&mut self, coordinate: u32, arm: u32) -> Result<bool, Error> {
        let n = self.sbox.n();
        if coordinate == 0 || coordinate > n {
            return Err(Error::CoordinateOutOfRange { coordinate, n });
        }
        if arm >= 1 << (n - 1) {
            return Err(Error::ArmOutOfRange { arm, n });
        }
        let (v0, v1) = arm_targets(n, coordinate, arm);
        let x0 = self.sbox.inverse_of(v0) as usize;
        let x1 = self.sbox.inverse_of(v1) as usize;
        let bandit = &self.bandits[coordinate as usize - 1];
        let candidate =
            column_total_after_two_point(bandit.spectrum.values(), x0, x1, &self.pow);
        if candidate >= bandit.coordinate_fitness.total() {
            return Ok(false);
        }
        self.sbox = bit_swap_inputs(&self.sbox, coordinate, arm).expect("validated above");
        let bandit = &mut self.bandits[coordinate as usize - 1];
        for (a, value) in bandit.spectrum.values_mut().iter_mut().enumerate() {
            *value += two_point_delta(a, x0, x1);
        }
        bandit.coordinate_nl = nonlinearity_of_spectrum(&bandit.spectrum);
        bandit.coordinate_fitness = fitness_value(candidate);
        Ok(true)
    }
}

/// Builds the bandit model of `s`: fresh spectrum, nonlinearity, and fitness
/// for every coordinate, with the fitness exponent taken from `cfg`.
pub fn build_model(s: &SBox, cfg: &BanditConfig) -> Result<BanditModel, Error> {
    let fitness_cfg = FitnessConfig {
        magnitude: cfg.magnitude,
    };
    let pow = PowTable::build(s.n(), fitness_cfg)?;
    let bandits = (1..=s.n())
        .map(|j| {
            let spectrum =
                walsh_transform(&coordinate_truth_table(s, j).expect("j in range"));
            Bandit {
                coordinate_nl: nonlinearity_of_spectrum(&spectrum),
                coordinate_fitness: fitness_value(pow.column_total(spectrum.values())),
                spectrum,
            }
        })
        .collect();
    Ok(BanditModel {
        sbox: s.clone(),
        bandits,
        magnitude: cfg.magnitude,
        pow,
    })
}

/// Picks the bandit with the lowest coordinate nonlinearity; ties are broken
/// uniformly at random. Randomness is consumed only when there is a tie.
pub fn choose_bandit(m: &BanditModel, rng: &mut impl Rng) -> u32 {
    let lowest = m
        .bandits
        .iter()
        .map(|b| b.coordinate_nl)
        .min()
        .expect("model has at least one bandit");
    let ties: Vec<u32> = m
        .bandits
        .iter()
        .enumerate()
        .filter(|(_, b)| b.coordinate_nl == lowest)
        .map(|(idx, _)| idx as u32 + 1)
        .collect();
    if ties.len() == 1 {
        ties[0]
    } else {
        ties[rng.gen_range(0..ties.len())]
    }
}

/// Runs the bandit loop from `start`: weakest bandit, uniformly random arm,
/// strict-improvement acceptance, stopping after `max_stall` consecutive
/// rejections.
///
/// ```
/// use sboxkit::{bandit_optimize, BanditConfig, random_sbox};
///
/// let start = random_sbox(8, 3).unwrap();
/// let cfg = BanditConfig { max_stall: Some(64), ..BanditConfig::default() };
/// let trace = bandit_optimize(&start, &cfg).unwrap();
/// assert!(trace.fitness_history.last().unwrap().1 <= trace.fitness_history[0].1);
/// ```
pub fn bandit_optimize(start: &SBox, cfg: &BanditConfig) -> Result<RunTrace, Error> {
    let n = start.n();
    let size = 1usize << n;
    let half = 1u32 << (n - 1);
    if cfg.freeze.k + 2 > size {
        return Err(Error::DegenerateFreeze {
            k: cfg.freeze.k,
            n,
        });
    }
    // The set of values held by frozen inputs never changes (those entries
    // never move), so arm legality is constant for the whole run.
    let legal_arms: Option<Vec<Vec<u32>>> = if cfg.freeze.k == 0 {
        None
    } else {
        let mut frozen = vec![false; size];
        for &v in &start.dlut()[..cfg.freeze.k] {
            frozen[v as usize] = true;
        }
        let mut per_coordinate = Vec::with_capacity(n as usize);
        for j in 1..=n {
            let legal: Vec<u32> = (0..half)
                .filter(|&arm| {
                    let (v0, v1) = arm_targets(n, j, arm);
                    !frozen[v0 as usize] && !frozen[v1 as usize]
                })
                .collect();
            if legal.is_empty() {
                return Err(Error::FrozenBandit { coordinate: j });
            }
            per_coordinate.push(legal);
        }
        Some(per_coordinate)
    };

    let mut model = build_model(start, cfg)?;
    let max_stall = cfg.max_stall.unwrap_or_else(|| default_bandit_stall(n));
    assert!(max_stall >= 1, "max_stall must be >= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let mut total: u128 = model
        .bandits
        .iter()
        .map(|b| b.coordinate_fitness.total())
        .sum();
    let mut iterations = 0u64;
    let mut accepted = 0u64;
    let mut stall = 0u64;
    let mut fitness_history = vec![(0, fitness_value(total))];

    while stall < max_stall {
        iterations += 1;
        let coordinate = choose_bandit(&model, &mut rng);
        let arm = match &legal_arms {
            None => rng.gen_range(0..half),
            Some(per) => {
                let legal = &per[coordinate as usize - 1];
                legal[rng.gen_range(0..legal.len())]
            }
        };
        let before = model.bandit(coordinate).coordinate_fitness.total();
        if model.activate(coordinate, arm).expect("validated draw") {
            let after = model.bandit(coordinate).coordinate_fitness.total();
            total = total - before + after;
            accepted += 1;
            stall = 0;
            fitness_history.push((iterations, fitness_value(total)));
        } else {
            stall += 1;
        }
    }

    let final_metrics = MetricsSummary::compute(&model.sbox);
    Ok(RunTrace {
        iterations,
        accepted,
        fitness_history,
        final_sbox: model.sbox,
        final_metrics,
    })
}

/// Runs hill climbing, then the bandit loop on its result: the composition
/// that reaches past what either heuristic manages alone.
///
/// The bandit stage starts from the hill stage's final S-box; its
/// strict-improvement rule means the composed result never falls below the
/// hill result on the fitness it optimizes.
pub fn compose_optimize(
    start: &SBox,
    hill_cfg: &crate::hill::HillClimbConfig,
    bandit_cfg: &BanditConfig,
) -> Result<(RunTrace, RunTrace), Error> {
    let hill_trace = crate::hill::hill_climb(start, hill_cfg)?;
    let bandit_trace = bandit_optimize(&hill_trace.final_sbox, bandit_cfg)?;
    Ok((hill_trace, bandit_trace))
}
