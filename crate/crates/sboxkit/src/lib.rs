//! Linear-cryptanalytic analysis and stochastic optimization of bijective
//! S-boxes.
//!
//! The library measures an S-box's resistance to linear cryptanalysis
//! exactly (Walsh spectra, the linear approximation table, nonlinearity per
//! coordinate and over all components, the average coordinate nonlinearity
//! value, the strict avalanche criterion) and improves that resistance with
//! two seeded heuristics built on the same machinery:
//!
//! - [`hill_climb`]: stochastic hill climbing over output transpositions,
//!   driven by a magnitude-weighted fitness that penalizes large linear
//!   biases super-linearly;
//! - [`bandit_optimize`]: a multi-armed-bandit loop where each output
//!   coordinate is a bandit whose arms swap the two outputs differing only
//!   in that coordinate's bit, so every move touches exactly one
//!   coordinate's truth table.
//!
//! [`compose_optimize`] chains them, which is how the best embedded
//! reference table was produced. All arithmetic is exact (integer spectra,
//! rational averages, 128-bit fitness totals); all randomness flows from one
//! seeded generator per run, so every result is reproducible.
//!
//! Bit positions are numbered 1 (most significant) to n throughout:
//! coordinate j of an n-bit S-box is the Boolean function returning output
//! bit j in that order.
//!
//! ```
//! use sboxkit::{corpus_get, MetricsSummary};
//!
//! let entry = corpus_get("paper_sc").unwrap();
//! let metrics = MetricsSummary::compute(&entry.sbox);
//! assert_eq!(metrics.coordinate_nls, vec![114; 8]);
//! assert_eq!(metrics.nl, 96);
//! ```

mod bandit;
mod corpus;
mod error;
mod fitness;
mod hill;
mod rational;
mod report;
mod sbox;
mod spectral;

pub use bandit::{
    bandit_optimize, build_model, choose_bandit, compose_optimize, default_bandit_stall, Bandit,
    BanditConfig, BanditModel,
};
pub use corpus::{corpus_get, corpus_list, CorpusEntry, ExpectedMetrics};
pub use error::Error;
pub use fitness::{
    evaluate, evaluate_after_bit_swap, evaluate_coordinate, FitnessConfig, FitnessValue,
};
pub use hill::{default_hill_stall, hill_climb, random_sbox, HillClimbConfig, RunTrace};
pub use rational::Rational;
pub use report::{AnalysisReport, ComparisonRow, ComparisonTable, FitnessReport};
pub use sbox::{
    apply_transposition, bit_swap_inputs, parse_sbox, serialize_sbox, FrozenPrefix, SBox,
    SboxLayout,
};
pub use spectral::{
    acnv, component_truth_table, coordinate_nonlinearities, coordinate_truth_table, lat,
    nonlinearity_of, sac, sbox_nonlinearity, walsh_transform, LinearApproximationTable,
    MetricsSummary, SacResult, TruthTable, WalshSpectrum,
};
