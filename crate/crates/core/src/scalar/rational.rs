//! Arbitrary-precision rational numbers.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ScalarError;

/// Exact rational number. Always stored reduced with a positive denominator,
/// so structural equality coincides with numeric equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Builds `p/q`. Panics if `q == 0`; use [`Rational::from_bigints`] for
    /// fallible construction from untrusted input.
    pub fn new(p: i64, q: i64) -> Self {
        assert!(q != 0, "denominator must be nonzero");
        Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigints(p: BigInt, q: BigInt) -> Result<Self, ScalarError> {
        if q.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(p, q)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    /// Exact square root when `self` is the square of a rational, else `None`.
    /// Negative inputs report an error so callers can distinguish "irrational"
    /// from "imaginary".
    pub fn sqrt_exact(&self) -> Result<Option<Self>, ScalarError> {
        if self.is_negative() {
            return Err(ScalarError::NegativeRadicand(self.to_string()));
        }
        let (np, dp) = (self.0.numer(), self.0.denom());
        let (ns, ds) = (np.sqrt(), dp.sqrt());
        if &(&ns * &ns) == np && &(&ds * &ds) == dp {
            Ok(Some(Rational(BigRational::new(ns, ds))))
        } else {
            Ok(None)
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ScalarError::InvalidRational(s.to_string());
        let t = s.trim();
        let (p, q) = match t.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (t, "1"),
        };
        let p = BigInt::from_str(p).map_err(|_| bad())?;
        let q = BigInt::from_str(q).map_err(|_| bad())?;
        Rational::from_bigints(p, q)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

// ---- arithmetic ----

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        &self + &rhs
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        &self - &rhs
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        &self * &rhs
    }
}

impl Div for &Rational {
    type Output = Rational;
    /// Panics if `rhs` is zero; use [`Rational::recip`] to test first.
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(&self.0 / &rhs.0)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_with_positive_denominator() {
        let r = Rational::new(4, -6);
        assert_eq!(r.to_string(), "-2/3");
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "7", "-3/4", "22/7"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!("4/6".parse::<Rational>().unwrap().to_string(), "2/3");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("h".parse::<Rational>().is_err());
    }

    #[test]
    fn exact_square_roots() {
        let sq = |p, q| Rational::new(p, q).sqrt_exact().unwrap();
        assert_eq!(sq(9, 4), Some(Rational::new(3, 2)));
        assert_eq!(sq(2, 1), None);
        assert_eq!(sq(0, 1), Some(Rational::zero()));
        assert_eq!(sq(1, 5), None);
        assert!(Rational::new(-1, 1).sqrt_exact().is_err());
    }

    #[test]
    fn no_fixed_width_overflow() {
        // i64::MAX squared exceeds every fixed-width integer type.
        let big = Rational::from_int(i64::MAX);
        let sq = &big * &big;
        assert_eq!(sq.sqrt_exact().unwrap(), Some(big));
    }
}
