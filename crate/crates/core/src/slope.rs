use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};

/// A reduced rational `s/r`, naming the stable bundle `O(s/r)` of rank `r`
/// and degree `s`. Also used as a plain rational cut point for truncations.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope(Ratio<i64>);

impl Slope {
    pub const ZERO: Slope = Slope(Ratio::new_raw(0, 1));

    /// Strict constructor: `denominator >= 1` and `gcd(|numerator|, denominator) = 1`.
    pub fn new(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator < 1 || numerator.gcd(&denominator) != 1 {
            return Err(Error::InvalidSlope { numerator, denominator });
        }
        Ok(Slope(Ratio::new_raw(numerator, denominator)))
    }

    /// Normalizing constructor for any nonzero denominator.
    pub fn reduced(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::InvalidSlope { numerator, denominator });
        }
        Ok(Slope(Ratio::new(numerator, denominator)))
    }

    pub fn integer(n: i64) -> Self {
        Slope(Ratio::from_integer(n))
    }

    /// Degree of `O(self)`.
    pub fn numerator(&self) -> i64 {
        *self.0.numer()
    }

    /// Rank of `O(self)`.
    pub fn denominator(&self) -> i64 {
        *self.0.denom()
    }

    pub fn as_ratio(&self) -> Ratio<i64> {
        self.0
    }

    pub fn from_ratio(r: Ratio<i64>) -> Self {
        Slope(r)
    }

    pub fn is_zero(&self) -> bool {
        self.numerator() == 0
    }

    pub fn is_positive(&self) -> bool {
        self.numerator() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.numerator() < 0
    }
}

impl std::ops::Neg for Slope {
    type Output = Slope;
    fn neg(self) -> Slope {
        Slope(-self.0)
    }
}

impl std::ops::Add for Slope {
    type Output = Slope;
    fn add(self, rhs: Slope) -> Slope {
        Slope(self.0 + rhs.0)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator() == 1 {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "{}/{}", self.numerator(), self.denominator())
        }
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Slope({self})")
    }
}
