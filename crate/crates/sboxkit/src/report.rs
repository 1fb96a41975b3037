//! Analysis reports and comparison tables, with text, JSON, and CSV
//! rendering.
//!
//! Rendering conventions: the average coordinate nonlinearity is printed
//! with two decimals in analysis reports and with its minimal exact decimal
//! expansion in comparison tables (so halves read `.5`, whole numbers `.0`);
//! the avalanche mean is printed with seven decimals.

use serde::{Deserialize, Serialize};

use crate::fitness::FitnessValue;
use crate::rational::Rational;
use crate::sbox::SBox;
use crate::spectral::{acnv, coordinate_nonlinearities, sac, sbox_nonlinearity};

/// A fitness evaluation attached to a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FitnessReport {
    /// The exponent M the value was computed with.
    pub magnitude: u32,
    /// The exact total.
    pub value: FitnessValue,
}

/// The full linear profile of one S-box.
///
/// Always true of a freshly computed report: the average coordinate
/// nonlinearity lies between the minimum and maximum coordinate values, and
/// the S-box nonlinearity never exceeds the minimum coordinate value (it
/// ranges over strictly more component functions).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    /// Where the S-box came from: a corpus id or a file path.
    pub source: String,
    /// Input/output width in bits.
    pub n: u32,
    /// Per-coordinate nonlinearities, coordinate 1 (most significant) first.
    pub coordinate_nls: Vec<u32>,
    /// Smallest coordinate nonlinearity.
    pub min_coordinate_nl: u32,
    /// Largest coordinate nonlinearity.
    pub max_coordinate_nl: u32,
    /// Average coordinate nonlinearity, exact.
    pub acnv: Rational,
    /// Nonlinearity over all nonzero components.
    pub nl: u32,
    /// Mean of the avalanche matrix, exact.
    pub sac_average: Rational,
    /// The full avalanche matrix, on request.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sac_matrix: Option<Vec<Vec<Rational>>>,
    /// A fitness evaluation, on request.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fitness: Option<FitnessReport>,
}

impl AnalysisReport {
    /// Computes the standard report for `s`. The avalanche matrix and the
    /// fitness slot start empty; fill them from the public fields.
    pub fn new(source: impl Into<String>, s: &SBox) -> AnalysisReport {
        let coordinate_nls = coordinate_nonlinearities(s);
        let min = *coordinate_nls.iter().min().expect("n >= 3");
        let max = *coordinate_nls.iter().max().expect("n >= 3");
        AnalysisReport {
            source: source.into(),
            n: s.n(),
            coordinate_nls,
            min_coordinate_nl: min,
            max_coordinate_nl: max,
            acnv: acnv(s),
            nl: sbox_nonlinearity(s),
            sac_average: sac(s).average,
            sac_matrix: None,
            fitness: None,
        }
    }

    /// Plain-text rendering, one field per line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("source: {}\n", self.source));
        out.push_str(&format!("n: {}\n", self.n));
        let joined: Vec<String> = self.coordinate_nls.iter().map(u32::to_string).collect();
        out.push_str(&format!("coordinate NLs: {}\n", joined.join(" ")));
        out.push_str(&format!("min coordinate NL: {}\n", self.min_coordinate_nl));
        out.push_str(&format!("max coordinate NL: {}\n", self.max_coordinate_nl));
        out.push_str(&format!("ACNV: {}\n", self.acnv.to_fixed_decimal(2)));
        out.push_str(&format!("NL: {}\n", self.nl));
        out.push_str(&format!(
            "SAC average: {}\n",
            self.sac_average.to_fixed_decimal(7)
        ));
        if let Some(fitness) = &self.fitness {
            out.push_str(&format!(
                "fitness (M={}): {}\n",
                fitness.magnitude, fitness.value
            ));
        }
        if let Some(matrix) = &self.sac_matrix {
            out.push_str("SAC matrix:\n");
            for row in matrix {
                let cells: Vec<String> =
                    row.iter().map(|r| r.to_fixed_decimal(7)).collect();
                out.push_str(&format!("  {}\n", cells.join(" ")));
            }
        }
        out
    }

    /// CSV rendering: a frozen header row plus one data row. The coordinate
    /// list is space-joined inside one field; the two optional fitness
    /// fields are left empty when no fitness was computed; the avalanche
    /// matrix is never part of the CSV form.
    pub fn render_csv(&self) -> String {
        let joined: Vec<String> = self.coordinate_nls.iter().map(u32::to_string).collect();
        let (magnitude, value) = match &self.fitness {
            Some(f) => (f.magnitude.to_string(), f.value.to_string()),
            None => (String::new(), String::new()),
        };
        format!(
            "source,n,coordinate_nls,min_coordinate_nl,max_coordinate_nl,acnv,nl,sac_average,fitness_magnitude,fitness\n{},{},{},{},{},{},{},{},{},{}\n",
            self.source,
            self.n,
            joined.join(" "),
            self.min_coordinate_nl,
            self.max_coordinate_nl,
            self.acnv.to_fixed_decimal(2),
            self.nl,
            self.sac_average.to_fixed_decimal(7),
            magnitude,
            value,
        )
    }
}

/// One comparison row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonRow {
    /// Corpus id or file stem.
    pub label: String,
    /// Smallest coordinate nonlinearity.
    pub min_nl: u32,
    /// Largest coordinate nonlinearity.
    pub max_nl: u32,
    /// Average coordinate nonlinearity, exact.
    pub acnv: Rational,
}

/// Rows of labeled coordinate-nonlinearity summaries, sorted ascending by
/// average value (ties by label), so the strongest profile reads last.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonTable {
    /// The sorted rows.
    pub rows: Vec<ComparisonRow>,
}

impl ComparisonTable {
    /// Builds a table from unsorted rows.
    pub fn build(mut rows: Vec<ComparisonRow>) -> ComparisonTable {
        rows.sort_by(|a, b| a.acnv.cmp(&b.acnv).then_with(|| a.label.cmp(&b.label)));
        ComparisonTable { rows }
    }

    /// Computes one row for `s`.
    pub fn row(label: impl Into<String>, s: &SBox) -> ComparisonRow {
        let coordinate_nls = coordinate_nonlinearities(s);
        ComparisonRow {
            label: label.into(),
            min_nl: *coordinate_nls.iter().min().expect("n >= 3"),
            max_nl: *coordinate_nls.iter().max().expect("n >= 3"),
            acnv: acnv(s),
        }
    }

    /// Plain-text rendering with aligned columns.
    pub fn render_text(&self) -> String {
        let mut label_width = "label".len();
        for row in &self.rows {
            label_width = label_width.max(row.label.len());
        }
        let mut out = format!(
            "{:<label_width$}  {:>6}  {:>6}  {:>6}\n",
            "label", "min NL", "max NL", "ACNV"
        );
        for row in &self.rows {
            out.push_str(&format!(
                "{:<label_width$}  {:>6}  {:>6}  {:>6}\n",
                row.label,
                row.min_nl,
                row.max_nl,
                row.acnv.to_minimal_decimal()
            ));
        }
        out
    }

    /// CSV rendering with a header row.
    pub fn render_csv(&self) -> String {
        let mut out = String::from("label,min_nl,max_nl,acnv\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                row.label,
                row.min_nl,
                row.max_nl,
                row.acnv.to_minimal_decimal()
            ));
        }
        out
    }
}
