//! Membership grades: exact rationals in the closed unit interval.
//!
//! A [`Grade`] is always stored in lowest terms, so equality and hashing are
//! structural. The only operations the theory needs are `max`, `min` and the
//! complement `1 - g`; all three are closed over reduced fractions and never
//! require addition of unlike fractions, so no arithmetic here can overflow.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A membership grade `p/q` with `0 <= p <= q`, `q > 0` and `gcd(p, q) = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Grade {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl Grade {
    /// The bottom grade, `0`.
    pub const ZERO: Grade = Grade { num: 0, den: 1 };
    /// The top grade, `1`.
    pub const ONE: Grade = Grade { num: 1, den: 1 };

    /// Builds the reduced grade `num/den`.
    ///
    /// A negative denominator is accepted when the numerator is non-positive,
    /// so `-1/-2` is `1/2`.
    pub fn new(num: i64, den: i64) -> Result<Grade, Error> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        let (n, d) = if den < 0 {
            (-(num as i128), -(den as i128))
        } else {
            (num as i128, den as i128)
        };
        if n < 0 || n > d {
            return Err(Error::OutOfUnitInterval { num, den });
        }
        Ok(Grade::reduced(n as u64, d as u64))
    }

    /// Builds `num/den` from unsigned parts.
    pub fn from_ratio(num: u64, den: u64) -> Result<Grade, Error> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        if num > den {
            return Err(Error::OutOfUnitInterval {
                num: num as i64,
                den: den as i64,
            });
        }
        Ok(Grade::reduced(num, den))
    }

    fn reduced(num: u64, den: u64) -> Grade {
        if num == 0 {
            return Grade::ZERO;
        }
        let g = gcd(num, den);
        Grade {
            num: num / g,
            den: den / g,
        }
    }

    pub fn numerator(self) -> u64 {
        self.num
    }

    pub fn denominator(self) -> u64 {
        self.den
    }

    /// `1 - g`. Since `gcd(q - p, q) = gcd(p, q)`, the result is already reduced.
    pub fn complement(self) -> Grade {
        Grade {
            num: self.den - self.num,
            den: self.den,
        }
    }

    /// Lattice join (`max`).
    pub fn join(self, other: Grade) -> Grade {
        self.max(other)
    }

    /// Lattice meet (`min`).
    pub fn meet(self, other: Grade) -> Grade {
        self.min(other)
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn is_one(self) -> bool {
        self.num == self.den
    }

    /// True when the grade is `0` or `1`.
    pub fn is_crisp(self) -> bool {
        self.is_zero() || self.is_one()
    }

    /// The `k`-level lattice `{0, 1/k, ..., 1}` in increasing order.
    pub fn levels(k: u64) -> Result<Vec<Grade>, Error> {
        if k == 0 {
            return Err(Error::ZeroDenominator);
        }
        (0..=k).map(|i| Grade::from_ratio(i, k)).collect()
    }
}

impl Ord for Grade {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Grade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Default for Grade {
    fn default() -> Self {
        Grade::ZERO
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Grade {
    type Err = Error;

    /// Accepts `"0"`, `"1"`, or `"p/q"` (not necessarily reduced).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || Error::MalformedGrade(s.to_string());
        let parse_part = |part: &str| -> Result<i64, Error> {
            let part = part.trim();
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit() || b == b'-') {
                return Err(malformed());
            }
            part.parse::<i64>().map_err(|_| malformed())
        };
        match s.split_once('/') {
            Some((n, d)) => Grade::new(parse_part(n)?, parse_part(d)?),
            None => Grade::new(parse_part(s)?, 1),
        }
    }
}
