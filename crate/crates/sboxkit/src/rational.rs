//! Exact nonnegative rationals for reporting averaged metrics.
//!
//! Every averaged quantity in this crate (mean coordinate nonlinearity, SAC
//! probabilities and their mean) is a ratio of two integers with a
//! power-of-two-friendly denominator, so it is kept exact instead of going
//! through floating point. Rendering to decimal strings is explicit and
//! deterministic.

use std::cmp::Ordering;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A reduced nonnegative rational number.
///
/// ```
/// use sboxkit::Rational;
///
/// let acnv = Rational::new(916, 8);
/// assert_eq!(acnv, Rational::new(229, 2));
/// assert_eq!(acnv.to_fixed_decimal(2), "114.50");
/// assert_eq!(acnv.to_minimal_decimal(), "114.5");
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    /// Builds `num / den` in lowest terms.
    ///
    /// # Panics
    ///
    /// Panics if `den` is zero.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "rational denominator must be nonzero");
        let g = gcd(num, den);
        Rational {
            num: num / g,
            den: den / g,
        }
    }

    /// The reduced numerator.
    pub fn numerator(&self) -> u64 {
        self.num
    }

    /// The reduced denominator (always nonzero).
    pub fn denominator(&self) -> u64 {
        self.den
    }

    /// Renders with exactly `digits` decimal places, rounding half away
    /// from zero. `digits` may be at most 17.
    pub fn to_fixed_decimal(&self, digits: u32) -> String {
        assert!(digits <= 17, "at most 17 decimal digits supported");
        let scale = 10u128.pow(digits);
        let num = self.num as u128;
        let den = self.den as u128;
        let scaled = (2 * num * scale + den) / (2 * den);
        let int = scaled / scale;
        if digits == 0 {
            return int.to_string();
        }
        let frac = scaled % scale;
        format!("{int}.{frac:0width$}", width = digits as usize)
    }

    /// Renders the shortest exact decimal expansion with at least one
    /// decimal place ("114.0", "114.5", "104.75").
    ///
    /// Expansion is exact whenever the reduced denominator has no prime
    /// factors other than 2 and 5, which holds for every value this crate
    /// produces; other denominators are rounded at 17 places.
    pub fn to_minimal_decimal(&self) -> String {
        let mut out = (self.num / self.den).to_string();
        out.push('.');
        let mut rem = (self.num % self.den) as u128;
        let den = self.den as u128;
        let mut produced = 0;
        while (rem != 0 && produced < 17) || produced == 0 {
            rem *= 10;
            let digit = rem / den;
            rem %= den;
            out.push(char::from(b'0' + digit as u8));
            produced += 1;
        }
        if rem != 0 {
            // non-terminating input: fall back to the rounded form
            return self.to_fixed_decimal(17);
        }
        while out.ends_with('0') && !out.ends_with(".0") {
            out.pop();
        }
        out
    }
}

impl From<u64> for Rational {
    fn from(v: u64) -> Self {
        Rational { num: v, den: 1 }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_minimal_decimal())
    }
}

#[derive(Serialize, Deserialize)]
struct RawRational {
    numerator: u64,
    denominator: u64,
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawRational {
            numerator: self.num,
            denominator: self.den,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawRational::deserialize(deserializer)?;
        if raw.denominator == 0 {
            return Err(D::Error::custom("rational denominator must be nonzero"));
        }
        Ok(Rational::new(raw.numerator, raw.denominator))
    }
}
