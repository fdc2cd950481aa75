//! Exact rational membership grades in `[0, 1]`.
//!
//! Every grade is a reduced rational backed by [`num_rational::Ratio<i64>`].
//! There is no floating point anywhere in the crate: the deciders rely on
//! exact equalities such as `1/n = min(1, n/m)`, which floats would corrupt.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A membership grade: an exact rational in `[0, 1]`, kept in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grade(Ratio<i64>);

impl Grade {
    pub const ZERO: Grade = Grade(Ratio::new_raw(0, 1));
    pub const ONE: Grade = Grade(Ratio::new_raw(1, 1));

    /// Builds `numer/denom`, reducing to lowest terms.
    pub fn new(numer: i64, denom: i64) -> Result<Grade> {
        if denom == 0 {
            return Err(Error::GradeParse(format!("{numer}/{denom}")));
        }
        Grade::from_ratio(Ratio::new(numer, denom))
    }

    pub fn from_ratio(r: Ratio<i64>) -> Result<Grade> {
        if r < Ratio::zero() || r > Ratio::one() {
            return Err(Error::GradeOutOfRange(r.to_string()));
        }
        Ok(Grade(r))
    }

    /// `1/n` for `n >= 1`; the grade a non-periodic element takes in the
    /// n-th member of the periodic-point chain.
    pub fn unit_fraction(n: u32) -> Grade {
        Grade(Ratio::new(1, i64::from(n.max(1))))
    }

    /// `min(1, n/m)`.
    pub fn capped_fraction(n: u32, m: u32) -> Grade {
        let r = Ratio::new(i64::from(n), i64::from(m.max(1)));
        Grade(r.min(Ratio::one()))
    }

    pub fn complement(self) -> Grade {
        Grade(Ratio::one() - self.0)
    }

    pub fn min(self, other: Grade) -> Grade {
        Grade(self.0.min(other.0))
    }

    pub fn max(self, other: Grade) -> Grade {
        Grade(self.0.max(other.0))
    }

    /// Exact midpoint, used when building threshold grids.
    pub fn midpoint(self, other: Grade) -> Grade {
        Grade((self.0 + other.0) / 2)
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(self) -> bool {
        self.0.is_one()
    }

    pub fn is_crisp(self) -> bool {
        self.is_zero() || self.is_one()
    }

    pub fn numer(self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(self) -> i64 {
        *self.0.denom()
    }
}

impl fmt::Display for Grade {
    /// `"p/q"` in lowest terms; integers print without the denominator,
    /// so the two crisp grades render as `"0"` and `"1"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Grade {
    type Err = Error;

    fn from_str(s: &str) -> Result<Grade> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<i64> {
            t.parse::<i64>()
                .map_err(|_| Error::GradeParse(s.to_string()))
        };
        match s.split_once('/') {
            None => {
                let n = parse_int(s)?;
                Grade::new(n, 1)
            }
            Some((p, q)) => {
                let numer = parse_int(p)?;
                let denom = parse_int(q)?;
                if denom == 0 {
                    return Err(Error::GradeParse(s.to_string()));
                }
                Grade::new(numer, denom)
            }
        }
    }
}

impl Serialize for Grade {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Grade {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Grade, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}
