//! Walsh spectra, linear approximation tables, nonlinearity, and SAC.
//!
//! All arithmetic in this module is exact: spectra and LAT entries are
//! integers, averaged quantities are [`Rational`]s. Nothing here touches
//! floating point.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rational::Rational;
use crate::sbox::SBox;

/// A Boolean function given by its output bit for every input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    n: u32,
    bits: Vec<u8>,
}

impl TruthTable {
    /// Wraps `2^n` output bits (each 0 or 1), inferring n from the length.
    ///
    /// # Panics
    ///
    /// Panics if the length is not a power of two of at least 2, or if any
    /// entry exceeds 1.
    pub fn new(bits: Vec<u8>) -> Self {
        assert!(
            bits.len().is_power_of_two() && bits.len() >= 2,
            "truth table length must be 2^n"
        );
        assert!(bits.iter().all(|&b| b <= 1), "truth table bits must be 0 or 1");
        TruthTable {
            n: bits.len().trailing_zeros(),
            bits,
        }
    }

    /// Variable count.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The function's outputs, indexed by input.
    pub fn bits(&self) -> &[u8] {
        &self.bits
    }
}

/// The Walsh-Hadamard spectrum of a Boolean function.
///
/// `values[a]` is the correlation sum of the function against the linear
/// function with mask `a`: the count of agreeing inputs minus the count of
/// disagreeing ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: u32,
    values: Vec<i32>,
}

impl WalshSpectrum {
    /// Variable count.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Spectrum values indexed by linear mask.
    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub(crate) fn values_mut(&mut self) -> &mut [i32] {
        &mut self.values
    }
}

/// The linear approximation table of an S-box, stored column-major.
///
/// Column `c` describes the component function `<c, S(x)>` (the XOR of the
/// output bits selected by `c`, MSB-indexed); row `a` is the input mask.
/// Entry values are half the corresponding Walsh spectrum values, equal to
/// `2^{n-1}` minus the Hamming distance between the component and the linear
/// function `<a, x>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearApproximationTable {
    n: u32,
    columns: Vec<Vec<i32>>,
}

impl LinearApproximationTable {
    /// Dimension of the underlying S-box.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The entry at input mask `a`, output mask `c`.
    pub fn entry(&self, a: usize, c: usize) -> i32 {
        self.columns[c][a]
    }

    /// Column `c`: all entries for one component function.
    pub fn column(&self, c: usize) -> &[i32] {
        &self.columns[c]
    }
}

/// Extracts output bit `j` (1 = most significant) of every table entry.
///
/// ```
/// use sboxkit::{coordinate_truth_table, SBox};
///
/// let t = coordinate_truth_table(&SBox::identity(3), 1).unwrap();
/// assert_eq!(t.bits(), &[0, 0, 0, 0, 1, 1, 1, 1]);
/// ```
pub fn coordinate_truth_table(s: &SBox, j: u32) -> Result<TruthTable, Error> {
    if j == 0 || j > s.n() {
        return Err(Error::CoordinateOutOfRange {
            coordinate: j,
            n: s.n(),
        });
    }
    let shift = s.n() - j;
    Ok(TruthTable {
        n: s.n(),
        bits: s.dlut().iter().map(|&v| ((v >> shift) & 1) as u8).collect(),
    })
}

/// The truth table of the component `<c, S(x)>`, the XOR of the output bits
/// selected by mask `c`.
pub fn component_truth_table(s: &SBox, c: u16) -> TruthTable {
    TruthTable {
        n: s.n(),
        bits: s
            .dlut()
            .iter()
            .map(|&v| ((v & c).count_ones() & 1) as u8)
            .collect(),
    }
}

/// Computes the Walsh-Hadamard spectrum with the in-place butterfly.
///
/// Runs in O(n 2^n) and agrees exactly with the quadratic-time definition
/// `values[a] = sum over x of (-1)^(f(x) XOR <a,x>)`.
///
/// ```
/// use sboxkit::{walsh_transform, TruthTable};
///
/// let spectrum = walsh_transform(&TruthTable::new(vec![0; 8]));
/// assert_eq!(spectrum.values(), &[8, 0, 0, 0, 0, 0, 0, 0]);
/// ```
pub fn walsh_transform(t: &TruthTable) -> WalshSpectrum {
    let mut values: Vec<i32> = t.bits.iter().map(|&b| 1 - 2 * b as i32).collect();
    let mut h = 1;
    while h < values.len() {
        let mut i = 0;
        while i < values.len() {
            for j in i..i + h {
                let (x, y) = (values[j], values[j + h]);
                values[j] = x + y;
                values[j + h] = x - y;
            }
            i += 2 * h;
        }
        h *= 2;
    }
    WalshSpectrum { n: t.n, values }
}

/// Nonlinearity of a single Boolean function: the Hamming distance to the
/// nearest affine function, `2^{n-1} - max |W(a)| / 2` over every mask
/// including 0.
pub fn nonlinearity_of(t: &TruthTable) -> u32 {
    let spectrum = walsh_transform(t);
    nonlinearity_of_spectrum(&spectrum)
}

pub(crate) fn nonlinearity_of_spectrum(spectrum: &WalshSpectrum) -> u32 {
    let max = spectrum.values.iter().map(|v| v.unsigned_abs()).max().unwrap();
    (1 << (spectrum.n - 1)) - max / 2
}

/// Builds the full linear approximation table.
///
/// Memory is Θ(4^n) entries; intended for small n (the 16x16-table range).
pub fn lat(s: &SBox) -> LinearApproximationTable {
    let size = 1usize << s.n();
    let columns = (0..size)
        .map(|c| {
            let spectrum = walsh_transform(&component_truth_table(s, c as u16));
            spectrum.values.iter().map(|&w| w / 2).collect()
        })
        .collect();
    LinearApproximationTable { n: s.n(), columns }
}

/// S-box nonlinearity: `2^{n-1}` minus the largest absolute LAT entry
/// outside row 0 and column 0.
///
/// Streams over the `2^n - 1` nontrivial components without materializing
/// the whole table.
pub fn sbox_nonlinearity(s: &SBox) -> u32 {
    let size = 1usize << s.n();
    let mut worst = 0u32;
    for c in 1..size {
        let spectrum = walsh_transform(&component_truth_table(s, c as u16));
        let column_max = spectrum.values[1..]
            .iter()
            .map(|v| v.unsigned_abs())
            .max()
            .unwrap();
        worst = worst.max(column_max);
    }
    (1 << (s.n() - 1)) - worst / 2
}

/// Nonlinearity of every coordinate function, most significant bit first.
pub fn coordinate_nonlinearities(s: &SBox) -> Vec<u32> {
    (1..=s.n())
        .map(|j| nonlinearity_of(&coordinate_truth_table(s, j).expect("j in range")))
        .collect()
}

/// Average coordinate nonlinearity as an exact rational.
///
/// ```
/// use sboxkit::{acnv, Rational, SBox};
///
/// assert_eq!(acnv(&SBox::identity(8)), Rational::new(0, 1));
/// ```
pub fn acnv(s: &SBox) -> Rational {
    let sum: u64 = coordinate_nonlinearities(s).iter().map(|&v| v as u64).sum();
    Rational::new(sum, s.n() as u64)
}

/// The headline metrics of one S-box, bundled for traces and reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricsSummary {
    /// Nonlinearity of each coordinate, most significant first.
    pub coordinate_nls: Vec<u32>,
    /// Mean of `coordinate_nls`, exact.
    pub acnv: Rational,
    /// Full S-box nonlinearity over all components.
    pub nl: u32,
    /// Mean of the SAC dependence matrix, exact.
    pub sac_average: Rational,
}

impl MetricsSummary {
    /// Computes all four summary metrics of `s`.
    pub fn compute(s: &SBox) -> Self {
        let coordinate_nls = coordinate_nonlinearities(s);
        let sum: u64 = coordinate_nls.iter().map(|&v| v as u64).sum();
        MetricsSummary {
            acnv: Rational::new(sum, s.n() as u64),
            nl: sbox_nonlinearity(s),
            sac_average: sac(s).average,
            coordinate_nls,
        }
    }
}

/// The strict-avalanche-criterion dependence matrix and its average.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SacResult {
    /// `matrix[i-1][j-1]` is the probability that flipping input bit i flips
    /// output bit j (bits MSB-indexed from 1).
    pub matrix: Vec<Vec<Rational>>,
    /// Mean over all n^2 matrix cells; 1/2 is the ideal.
    pub average: Rational,
}

/// Computes the SAC dependence matrix exactly.
///
/// Cell (i, j) averages, over all inputs, output bit j of
/// `S(x) XOR S(x XOR e_i)` where `e_i` flips input bit i; both indexes are
/// MSB-first. The identity permutation yields the identity matrix.
pub fn sac(s: &SBox) -> SacResult {
    let n = s.n();
    let size = 1usize << n;
    let mut matrix = Vec::with_capacity(n as usize);
    let mut total = 0u64;
    for i in 1..=n {
        let flip = 1usize << (n - i);
        let mut counts = vec![0u64; n as usize];
        for x in 0..size {
            let diff = s.dlut()[x] ^ s.dlut()[x ^ flip];
            for (j, count) in counts.iter_mut().enumerate() {
                *count += ((diff >> (n - 1 - j as u32)) & 1) as u64;
            }
        }
        total += counts.iter().sum::<u64>();
        matrix.push(
            counts
                .into_iter()
                .map(|c| Rational::new(c, size as u64))
                .collect(),
        );
    }
    SacResult {
        matrix,
        average: Rational::new(total, n as u64 * n as u64 * size as u64),
    }
}
