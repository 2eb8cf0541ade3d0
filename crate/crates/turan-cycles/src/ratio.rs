//! Exact rational arithmetic for degree ratios, densities, and thresholds.
//!
//! Scans compare normalized degree ratios against thresholds; those
//! comparisons must be exact, so nothing in this crate ever goes through
//! floating point. Values serialize as `"p/q"` strings.

use std::fmt;
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// A reduced exact rational. Always finite; construction panics on a zero
/// denominator, which only ever indicates a caller bug.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rat(Ratio<i128>);

impl Rat {
    pub fn new(numer: i128, denom: i128) -> Self {
        assert!(denom != 0, "rational with zero denominator");
        Rat(Ratio::new(numer, denom))
    }

    pub fn zero() -> Self {
        Rat(Ratio::from_integer(0))
    }

    pub fn one() -> Self {
        Rat(Ratio::from_integer(1))
    }

    pub fn from_int(v: i128) -> Self {
        Rat(Ratio::from_integer(v))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.numer() == 0
    }

    /// Nearest f64, for display alongside the exact form only.
    pub fn approx(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat(self.0 + rhs.0)
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        Rat(self.0 - rhs.0)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        Rat(self.0 * rhs.0)
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rat(self.0 / rhs.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

/// Accepts `"p/q"` or a bare integer `"p"`.
impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (num_s, den_s) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s, "1"),
        };
        let numer: i128 = num_s.parse().map_err(|_| ParseRatError(s.to_string()))?;
        let denom: i128 = den_s.parse().map_err(|_| ParseRatError(s.to_string()))?;
        if denom == 0 {
            return Err(ParseRatError(s.to_string()));
        }
        Ok(Rat::new(numer, denom))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseRatError(pub String);

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational {:?} (expected \"p/q\" or an integer)", self.0)
    }
}

impl std::error::Error for ParseRatError {}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}
