//! Error type shared across the crate.

use std::fmt;

/// Errors produced by parsing, construction, and optimization routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The token count is not a power of two in the supported range
    /// `2^3 ..= 2^16`.
    UnsupportedSize { tokens: usize },
    /// A dimension argument lies outside the supported `3 ..= 16`.
    UnsupportedDimension { n: u32 },
    /// A token failed to parse as hexadecimal.
    BadToken { token: String },
    /// A value does not fit the inferred dimension (`value >= 2^n`).
    ValueOutOfRange { value: u64, n: u32 },
    /// A value occurs twice; the table is not a permutation.
    DuplicateValue { value: u16 },
    /// An index argument lies outside `0 .. 2^n`.
    IndexOutOfRange { index: usize, n: u32 },
    /// A transposition was requested with both indexes equal.
    EqualIndexes { index: usize },
    /// A coordinate argument lies outside `1 ..= n`.
    CoordinateOutOfRange { coordinate: u32, n: u32 },
    /// An arm argument lies outside `0 .. 2^(n-1)`.
    ArmOutOfRange { arm: u32, n: u32 },
    /// Grid serialization is defined for n = 8 only.
    GridRequiresN8 { n: u32 },
    /// The frozen prefix leaves fewer than two mutable indexes.
    DegenerateFreeze { k: usize, n: u32 },
    /// Every arm of the chosen bandit touches a frozen index.
    FrozenBandit { coordinate: u32 },
    /// Fitness accumulation would overflow the 128-bit accumulator.
    FitnessOverflow { n: u32, magnitude: u32 },
    /// No corpus entry has the requested id.
    UnknownCorpusId { id: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedSize { tokens } => write!(
                f,
                "expected 2^n values with 3 <= n <= 16, found {tokens} values"
            ),
            Error::UnsupportedDimension { n } => {
                write!(f, "dimension {n} outside the supported range 3..=16")
            }
            Error::BadToken { token } => {
                write!(f, "invalid hexadecimal token {token:?}")
            }
            Error::ValueOutOfRange { value, n } => {
                write!(f, "value {value:#x} does not fit an {n}-bit S-box")
            }
            Error::DuplicateValue { value } => {
                write!(f, "duplicate value {value:#x}: table is not bijective")
            }
            Error::IndexOutOfRange { index, n } => {
                write!(f, "index {index} out of range for an {n}-bit S-box")
            }
            Error::EqualIndexes { index } => {
                write!(f, "transposition needs two distinct indexes, got {index} twice")
            }
            Error::CoordinateOutOfRange { coordinate, n } => {
                write!(f, "coordinate {coordinate} out of range 1..={n}")
            }
            Error::ArmOutOfRange { arm, n } => {
                write!(f, "arm {arm} out of range for 2^({n}-1) arms")
            }
            Error::GridRequiresN8 { n } => {
                write!(f, "grid serialization is defined for n = 8, table has n = {n}")
            }
            Error::DegenerateFreeze { k, n } => write!(
                f,
                "freezing the first {k} of 2^{n} entries leaves fewer than two mutable indexes"
            ),
            Error::FrozenBandit { coordinate } => write!(
                f,
                "every arm of bandit {coordinate} touches a frozen index"
            ),
            Error::FitnessOverflow { n, magnitude } => write!(
                f,
                "fitness for n = {n}, magnitude = {magnitude} exceeds the 128-bit accumulator"
            ),
            Error::UnknownCorpusId { id } => {
                write!(f, "unknown corpus id {id:?}")
            }
        }
    }
}

impl std::error::Error for Error {}
