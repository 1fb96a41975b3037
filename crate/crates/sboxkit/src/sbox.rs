//! Bijective S-box representation, text format, and mutation moves.
//!
//! Bit positions are numbered 1 through n starting at the most significant
//! bit, so coordinate 1 of an output value `v` is `(v >> (n - 1)) & 1`.
//! Everything in this crate follows that convention.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A bijective n-bit S-box stored as its decimal lookup table.
///
/// `dlut[x]` is the output for input `x`; the table is always a permutation
/// of `0..2^n`. Values are immutable after construction: mutation moves
/// return new tables.
///
/// ```
/// use sboxkit::SBox;
///
/// let s = SBox::identity(3);
/// assert_eq!(s.n(), 3);
/// assert_eq!(s.dlut(), &[0, 1, 2, 3, 4, 5, 6, 7]);
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SBox {
    n: u32,
    dlut: Vec<u16>,
    inv: Vec<u16>,
}

/// Leading lookup-table entries pinned in place during optimization.
///
/// Freezing the first `k` entries guarantees the optimized result still
/// agrees with its starting table on those inputs, which is how an optimized
/// table proves its descent from a chosen original.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FrozenPrefix {
    /// Count of leading DLUT entries that must not change.
    pub k: usize,
}

/// Output layout for [`serialize_sbox`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SboxLayout {
    /// All tokens on one line, single-space separated.
    Flat,
    /// Sixteen lines of sixteen two-digit tokens; n = 8 only.
    Grid16,
}

impl SBox {
    /// Builds an S-box from its lookup table, inferring n from the length.
    ///
    /// The length must be `2^n` for some `3 <= n <= 16`, every value must be
    /// below `2^n`, and no value may repeat.
    pub fn new(dlut: Vec<u16>) -> Result<Self, Error> {
        let n = infer_dimension(dlut.len())?;
        let size = 1usize << n;
        let mut inv = vec![u16::MAX; size];
        for (x, &v) in dlut.iter().enumerate() {
            if (v as usize) >= size {
                return Err(Error::ValueOutOfRange { value: v as u64, n });
            }
            if inv[v as usize] != u16::MAX {
                return Err(Error::DuplicateValue { value: v });
            }
            inv[v as usize] = x as u16;
        }
        Ok(SBox { n, dlut, inv })
    }

    /// The identity permutation on `2^n` values.
    pub fn identity(n: u32) -> Self {
        assert!((3..=16).contains(&n), "supported dimensions are 3..=16");
        let dlut: Vec<u16> = (0..1u32 << n).map(|v| v as u16).collect();
        SBox {
            n,
            inv: dlut.clone(),
            dlut,
        }
    }

    /// Input/output bit count.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The lookup table; index = input, value = output.
    pub fn dlut(&self) -> &[u16] {
        &self.dlut
    }

    /// The input that maps to `value` (the inverse permutation), in O(1).
    ///
    /// # Panics
    ///
    /// Panics if `value >= 2^n`.
    pub fn inverse_of(&self, value: u16) -> u16 {
        self.inv[value as usize]
    }
}

#[derive(Serialize, Deserialize)]
struct RawSBox {
    n: u32,
    dlut: Vec<u16>,
}

impl Serialize for SBox {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawSBox {
            n: self.n,
            dlut: self.dlut.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SBox {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawSBox::deserialize(deserializer)?;
        let sbox = SBox::new(raw.dlut).map_err(D::Error::custom)?;
        if sbox.n != raw.n {
            return Err(D::Error::custom(format!(
                "declared dimension {} does not match table length",
                raw.n
            )));
        }
        Ok(sbox)
    }
}

fn infer_dimension(len: usize) -> Result<u32, Error> {
    for n in 3..=16 {
        if len == 1usize << n {
            return Ok(n);
        }
    }
    Err(Error::UnsupportedSize { tokens: len })
}

/// Parses the `.sbx` text format into an S-box.
///
/// From each `#` to the end of its line is a comment. The remaining text is
/// whitespace-separated case-insensitive hexadecimal tokens; the dimension n
/// is inferred from the token count (`2^n` tokens, `3 <= n <= 16`), and the
/// table must be a permutation.
///
/// ```
/// use sboxkit::parse_sbox;
///
/// let s = parse_sbox("# tiny identity\n00 01 02 03 04 05 06 07").unwrap();
/// assert_eq!(s.n(), 3);
/// assert!(parse_sbox("00 00 02 03 04 05 06 07").is_err()); // duplicate
/// ```
pub fn parse_sbox(text: &str) -> Result<SBox, Error> {
    let mut values = Vec::new();
    for line in text.lines() {
        let line = match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        };
        for token in line.split_whitespace() {
            if token.len() > 4 || !token.chars().all(|c| c.is_ascii_hexdigit()) {
                return Err(Error::BadToken {
                    token: token.to_string(),
                });
            }
            values.push(u16::from_str_radix(token, 16).expect("checked hex"));
        }
    }
    SBox::new(values)
}

/// Serializes an S-box to the `.sbx` text format.
///
/// Flat layout emits one line of `ceil(n/4)`-digit lowercase tokens; grid
/// layout emits the classic 16x16 arrangement and is defined for n = 8 only.
/// Both round-trip through [`parse_sbox`].
pub fn serialize_sbox(s: &SBox, layout: SboxLayout) -> Result<String, Error> {
    let digits = s.n.div_ceil(4) as usize;
    let tokens: Vec<String> = s
        .dlut
        .iter()
        .map(|v| format!("{v:0digits$x}"))
        .collect();
    match layout {
        SboxLayout::Flat => Ok(tokens.join(" ") + "\n"),
        SboxLayout::Grid16 => {
            if s.n != 8 {
                return Err(Error::GridRequiresN8 { n: s.n });
            }
            let mut out = String::new();
            for row in tokens.chunks(16) {
                out.push_str(&row.join(" "));
                out.push('\n');
            }
            Ok(out)
        }
    }
}

/// Returns `s` with the outputs at inputs `i` and `j` exchanged.
///
/// ```
/// use sboxkit::{apply_transposition, SBox};
///
/// let s = apply_transposition(&SBox::identity(3), 0, 1).unwrap();
/// assert_eq!(s.dlut(), &[1, 0, 2, 3, 4, 5, 6, 7]);
/// let back = apply_transposition(&s, 0, 1).unwrap();
/// assert_eq!(back, SBox::identity(3));
/// ```
pub fn apply_transposition(s: &SBox, i: usize, j: usize) -> Result<SBox, Error> {
    let size = s.dlut.len();
    for index in [i, j] {
        if index >= size {
            return Err(Error::IndexOutOfRange { index, n: s.n });
        }
    }
    if i == j {
        return Err(Error::EqualIndexes { index: i });
    }
    let mut out = s.clone();
    out.dlut.swap(i, j);
    out.inv[out.dlut[i] as usize] = i as u16;
    out.inv[out.dlut[j] as usize] = j as u16;
    Ok(out)
}

/// The two output values whose positions a `(coordinate, arm)` move swaps.
///
/// The arm is an (n-1)-bit pattern; inserting a 0 or a 1 at bit position
/// `coordinate` (MSB-indexed) yields the pair of outputs that differ in that
/// single bit.
pub(crate) fn arm_targets(n: u32, coordinate: u32, arm: u32) -> (u16, u16) {
    let shift = n - coordinate;
    let high = (arm >> shift) << (shift + 1);
    let low = arm & ((1 << shift) - 1);
    let v0 = high | low;
    (v0 as u16, (v0 | (1 << shift)) as u16)
}

/// Exchanges the two outputs that differ only in one bit of their value.
///
/// `coordinate` picks the differing bit (1 = most significant); `arm` gives
/// the remaining n-1 bits of the two output values. The move changes exactly
/// two lookup-table entries and flips exactly two truth-table bits of
/// coordinate `coordinate`, leaving every other coordinate's truth table
/// untouched.
///
/// ```
/// use sboxkit::{bit_swap_inputs, SBox};
///
/// // Outputs 000 and 100 trade places: the entries at inputs 0 and 4 swap.
/// let s = bit_swap_inputs(&SBox::identity(3), 1, 0b00).unwrap();
/// assert_eq!(s.dlut(), &[4, 1, 2, 3, 0, 5, 6, 7]);
/// ```
pub fn bit_swap_inputs(s: &SBox, coordinate: u32, arm: u32) -> Result<SBox, Error> {
    if coordinate == 0 || coordinate > s.n {
        return Err(Error::CoordinateOutOfRange {
            coordinate,
            n: s.n,
        });
    }
    if arm >= 1 << (s.n - 1) {
        return Err(Error::ArmOutOfRange { arm, n: s.n });
    }
    let (v0, v1) = arm_targets(s.n, coordinate, arm);
    let x0 = s.inv[v0 as usize] as usize;
    let x1 = s.inv[v1 as usize] as usize;
    let mut out = s.clone();
    out.dlut.swap(x0, x1);
    out.inv.swap(v0 as usize, v1 as usize);
    Ok(out)
}
