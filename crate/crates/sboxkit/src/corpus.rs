//! Embedded reference S-boxes: classical tables and the optimized variants
//! this library's heuristics are validated against.
//!
//! Nine entries ship. Three classical tables come from their cipher
//! specifications (AES, Whirlpool, Skipjack). The `paper_*` entries are the
//! attested figures of the optimization study the heuristics reproduce: the
//! chaos-derived baseline `S_c`, its best composed optimization, and one
//! hill-climbed variant of each classical table with the first row frozen.
//! The classical Fantomas table is absent: only 47 of its 256 bytes are
//! attested by the shared (frozen) cells of `paper_fantomas_opt`, and no
//! reachable source supplies the rest, so embedding a reconstruction would
//! be guesswork. `paper_fantomas_opt` itself is complete and ships.
//!
//! Each entry may carry `expected` metrics. Tests recompute them with the
//! spectral operations; a transcription error in any table would surface as
//! a loud metric mismatch.

mod tables;

use crate::error::Error;
use crate::rational::Rational;
use crate::sbox::SBox;

/// Published metrics attached to a corpus entry, for cross-checking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedMetrics {
    /// Coordinate nonlinearities, coordinate 1 (most significant) first.
    pub coordinate_nls: Option<[u32; 8]>,
    /// Average coordinate nonlinearity value.
    pub acnv: Option<Rational>,
    /// S-box nonlinearity over all nonzero component functions.
    pub nl: Option<u32>,
    /// Mean of the strict-avalanche-criterion matrix.
    pub sac_average: Option<Rational>,
    /// Where the numbers are attested.
    pub source: &'static str,
}

/// One embedded reference S-box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    /// Stable lookup id.
    pub id: &'static str,
    /// The table itself, validated bijective at load.
    pub sbox: SBox,
    /// One-line origin of the table.
    pub provenance: &'static str,
    /// Published metrics, when any are attested.
    pub expected: Option<ExpectedMetrics>,
}

struct RawEntry {
    id: &'static str,
    table: &'static [u16; 256],
    provenance: &'static str,
    expected: fn() -> Option<ExpectedMetrics>,
}

fn all_114() -> [u32; 8] {
    [114; 8]
}

const ENTRIES: &[RawEntry] = &[
    RawEntry {
        id: "aes",
        table: &tables::AES,
        provenance: "AES SubBytes table (FIPS 197)",
        expected: || {
            Some(ExpectedMetrics {
                coordinate_nls: Some([112; 8]),
                acnv: Some(Rational::new(112, 1)),
                nl: Some(112),
                sac_average: None,
                source: "standard linear profile of the AES S-box",
            })
        },
    },
    RawEntry {
        id: "whirlpool",
        table: &tables::WHIRLPOOL,
        provenance: "Whirlpool hash S-box (ISO/IEC 10118-3), generated from its E/E^-1/R mini-box circuit",
        expected: || None,
    },
    RawEntry {
        id: "skipjack",
        table: &tables::SKIPJACK,
        provenance: "Skipjack F-table (NSA, declassified 1998)",
        expected: || None,
    },
    RawEntry {
        id: "paper_sc",
        table: &tables::SC,
        provenance: "chaos-derived 8-bit S-box S_c, the baseline input of the optimization experiments",
        expected: || {
            Some(ExpectedMetrics {
                coordinate_nls: Some(all_114()),
                acnv: Some(Rational::new(114, 1)),
                nl: Some(96),
                sac_average: Some(Rational::new(1, 2)),
                source: "attested coordinate profile and avalanche mean of S_c",
            })
        },
    },
    RawEntry {
        id: "paper_sc_best",
        table: &tables::SC_BEST,
        provenance: "S_c optimized by hill climbing composed with the bandit loop (best attested coordinate profile)",
        expected: || {
            Some(ExpectedMetrics {
                // Coordinate 1 = most significant. The attested table lists
                // the least significant coordinate first, i.e. this array
                // reversed.
                coordinate_nls: Some([114, 114, 114, 114, 114, 116, 114, 116]),
                acnv: Some(Rational::new(229, 2)),
                nl: None,
                sac_average: None,
                source: "attested coordinate profile of the composed run",
            })
        },
    },
    RawEntry {
        id: "paper_aes_opt",
        table: &tables::AES_OPT,
        provenance: "AES table re-optimized by hill climbing with its first 16 entries frozen",
        expected: || {
            Some(ExpectedMetrics {
                coordinate_nls: Some(all_114()),
                acnv: Some(Rational::new(114, 1)),
                nl: None,
                sac_average: None,
                source: "attested average coordinate nonlinearity of the frozen-prefix run",
            })
        },
    },
    RawEntry {
        id: "paper_whirlpool_opt",
        table: &tables::WHIRLPOOL_OPT,
        provenance: "Whirlpool table re-optimized by hill climbing with its first 16 entries frozen",
        expected: || {
            Some(ExpectedMetrics {
                coordinate_nls: Some(all_114()),
                acnv: Some(Rational::new(114, 1)),
                nl: None,
                sac_average: None,
                source: "attested average coordinate nonlinearity of the frozen-prefix run",
            })
        },
    },
    RawEntry {
        id: "paper_fantomas_opt",
        table: &tables::FANTOMAS_OPT,
        provenance: "Fantomas table re-optimized by hill climbing with its first 16 entries frozen",
        expected: || {
            Some(ExpectedMetrics {
                coordinate_nls: Some(all_114()),
                acnv: Some(Rational::new(114, 1)),
                nl: None,
                sac_average: None,
                source: "attested average coordinate nonlinearity of the frozen-prefix run",
            })
        },
    },
    RawEntry {
        id: "paper_skipjack_opt",
        table: &tables::SKIPJACK_OPT,
        provenance: "Skipjack table re-optimized by hill climbing with its first 16 entries frozen",
        expected: || {
            Some(ExpectedMetrics {
                coordinate_nls: Some(all_114()),
                acnv: Some(Rational::new(114, 1)),
                nl: None,
                sac_average: None,
                source: "attested average coordinate nonlinearity of the frozen-prefix run",
            })
        },
    },
];

/// Looks up one corpus entry by id.
///
/// ```
/// use sboxkit::corpus_get;
///
/// let sc = corpus_get("paper_sc").unwrap();
/// assert_eq!(sc.sbox.dlut()[0], 0xab);
/// assert_eq!(sc.sbox.dlut()[0xf5], 0x5d);
/// assert!(corpus_get("des").is_err());
/// ```
pub fn corpus_get(id: &str) -> Result<CorpusEntry, Error> {
    let raw = ENTRIES
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownCorpusId { id: id.to_string() })?;
    let sbox = SBox::new(raw.table.to_vec()).expect("embedded tables are bijective");
    Ok(CorpusEntry {
        id: raw.id,
        sbox,
        provenance: raw.provenance,
        expected: (raw.expected)(),
    })
}

/// All corpus ids with their one-line provenance, in stable order.
///
/// ```
/// use sboxkit::corpus_list;
///
/// let ids: Vec<&str> = corpus_list().iter().map(|(id, _)| *id).collect();
/// assert_eq!(ids.len(), 9);
/// assert!(ids.contains(&"aes"));
/// ```
pub fn corpus_list() -> Vec<(&'static str, &'static str)> {
    ENTRIES.iter().map(|e| (e.id, e.provenance)).collect()
}
