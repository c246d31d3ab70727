//! Polynomials in the family parameter `h`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ExactRoot, Rational};

/// Polynomial in `h` with exact rational coefficients, stored in ascending
/// order of degree. The coefficient vector is canonical: empty for the zero
/// polynomial, otherwise the last entry is nonzero. Canonical form makes
/// structural equality coincide with polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    coeffs: Vec<Rational>,
}

fn normalize(mut coeffs: Vec<Rational>) -> Vec<Rational> {
    while coeffs.last().is_some_and(Rational::is_zero) {
        coeffs.pop();
    }
    coeffs
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Scalar::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Scalar {
            coeffs: normalize(vec![c]),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::constant(Rational::from_int(n))
    }

    /// The indeterminate `h` itself.
    pub fn h() -> Self {
        Scalar::monomial(Rational::one(), 1)
    }

    /// `c * h^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Scalar::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Scalar { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Scalar {
            coeffs: normalize(coeffs),
        }
    }

    /// Ascending integer coefficients; `&[8, 0, -4]` is `8 - 4h^2`.
    pub fn from_coeffs_i64(coeffs: &[i64]) -> Self {
        Scalar::from_coeffs(coeffs.iter().map(|&n| Rational::from_int(n)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `h^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Ascending coefficients with no trailing zeros.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// The value of a constant polynomial (zero included), `None` otherwise.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.coeff(0))
        } else {
            None
        }
    }

    /// `Some((a, k))` when the polynomial is the single term `a h^k` with
    /// `a != 0`; zero and multi-term polynomials give `None`.
    pub fn as_monomial(&self) -> Option<(Rational, usize)> {
        let mut found = None;
        for (k, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                if found.is_some() {
                    return None;
                }
                found = Some((a.clone(), k));
            }
        }
        found
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at a rational point by Horner's scheme.
    pub fn evaluate(&self, h: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * h) + c;
        }
        acc
    }

    /// Substitutes the rational point for `h`, producing a constant polynomial.
    pub fn specialize(&self, h: &Rational) -> Scalar {
        Scalar::constant(self.evaluate(h))
    }

    /// Evaluation at `sign * sqrt(radicand)`, returned as the exact pair
    /// `(a, b)` meaning `a + b * sqrt(radicand)`. Splitting even and odd
    /// powers keeps everything rational.
    pub fn evaluate_at_sqrt(&self, radicand: &Rational, negative: bool) -> (Rational, Rational) {
        let mut even = Rational::zero();
        let mut odd = Rational::zero();
        let mut p = Rational::one();
        for pair in self.coeffs.chunks(2) {
            even = &even + &(&pair[0] * &p);
            if let Some(c1) = pair.get(1) {
                odd = &odd + &(c1 * &p);
            }
            p = &p * radicand;
        }
        if negative {
            odd = -odd;
        }
        (even, odd)
    }

    /// Exact test for `p(root) == 0`.
    pub fn vanishes_at(&self, root: &ExactRoot) -> bool {
        match root {
            ExactRoot::Rational(r) => self.evaluate(r).is_zero(),
            ExactRoot::Surd { radicand, sign } => {
                // radicand is never a perfect square, so 1 and sqrt(radicand)
                // are independent over the rationals: a + b*sqrt must have
                // a = b = 0 to vanish.
                let (a, b) = self.evaluate_at_sqrt(radicand, sign.is_minus());
                a.is_zero() && b.is_zero()
            }
        }
    }

    /// Exact polynomial quotient, `None` when the division leaves a remainder
    /// or the divisor is zero.
    pub fn div_exact(&self, divisor: &Scalar) -> Option<Scalar> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        let dd = divisor.degree().expect("nonzero divisor");
        let lead = divisor.coeff(dd);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len()];
        while rem.len() >= dd + 1 {
            let k = rem.len() - 1 - dd;
            let q = &rem[rem.len() - 1] / &lead;
            for i in 0..=dd {
                let t = &rem[k + i] - &(&q * &divisor.coeff(i));
                rem[k + i] = t;
            }
            quot[k] = q;
            rem = normalize(rem);
            if rem.is_empty() {
                return Some(Scalar::from_coeffs(quot));
            }
            if rem.len() < dd + 1 {
                return None;
            }
        }
        None
    }
}

impl fmt::Display for Scalar {
    /// Expanded canonical form in descending powers, e.g. `-4h^2+8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            let m = c.abs();
            if k == 0 {
                write!(f, "{m}")?;
            } else {
                if !m.is_one() {
                    if m.is_integer() {
                        write!(f, "{m}")?;
                    } else {
                        write!(f, "({m})")?;
                    }
                }
                write!(f, "h")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Scalar {
    /// Ascending coefficient strings, `["2", "0", "-1"]` for `2 - h^2`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let coeffs = Vec::<Rational>::deserialize(deserializer)?;
        Ok(Scalar::from_coeffs(coeffs))
    }
}

// ---- arithmetic ----

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect();
        Scalar::from_coeffs(coeffs)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect();
        Scalar::from_coeffs(coeffs)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Scalar::from_coeffs(coeffs)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| &acc + &x)
    }
}

impl<'a> std::iter::Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| &acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(coeffs: &[i64]) -> Scalar {
        Scalar::from_coeffs_i64(coeffs)
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        assert_eq!(s(&[1, 2, 0, 0]), s(&[1, 2]));
        assert!(s(&[0, 0]).is_zero());
        assert_eq!(s(&[0]).degree(), None);
        assert_eq!(s(&[0, 0, 5]).degree(), Some(2));
    }

    #[test]
    fn ring_operations() {
        // (2 - h^2) * 4 = 8 - 4h^2
        assert_eq!(&s(&[2, 0, -1]) * &s(&[4]), s(&[8, 0, -4]));
        // h * h = h^2
        assert_eq!(&Scalar::h() * &Scalar::h(), s(&[0, 0, 1]));
        // (1 - h) + (1 + h) = 2
        assert_eq!(&s(&[1, -1]) + &s(&[1, 1]), s(&[2]));
        // (h^2 + 1) - (h^2 - 1) = 2
        assert_eq!(&s(&[1, 0, 1]) - &s(&[-1, 0, 1]), s(&[2]));
        assert_eq!(-&s(&[1, -2]), s(&[-1, 2]));
        assert_eq!(s(&[0, 3]).pow(2), s(&[0, 0, 9]));
    }

    /// Independent evaluation oracle: expand powers naively instead of by
    /// Horner's scheme.
    fn evaluate_naive(p: &Scalar, h: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let mut hp = Rational::one();
        for c in p.coeffs() {
            acc = &acc + &(c * &hp);
            hp = &hp * h;
        }
        acc
    }

    #[test]
    fn horner_agrees_with_naive_powers() {
        // 2 - 6h^2 at h = 1/2 evaluates to 1/2.
        let p = s(&[2, 0, -6]);
        let half = Rational::new(1, 2);
        assert_eq!(p.evaluate(&half), Rational::new(1, 2));
        assert_eq!(evaluate_naive(&p, &half), Rational::new(1, 2));

        let q = s(&[3, -7, 0, 5, 2]);
        for (n, d) in [(0, 1), (1, 1), (-1, 1), (1, 2), (-2, 3), (7, 5)] {
            let at = Rational::new(n, d);
            assert_eq!(q.evaluate(&at), evaluate_naive(&q, &at));
        }
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism() {
        let p = s(&[1, 0, -4]);
        let q = s(&[0, 2, 3]);
        let at = Rational::new(-3, 2);
        assert_eq!(
            (&p * &q).evaluate(&at),
            &p.evaluate(&at) * &q.evaluate(&at)
        );
        assert_eq!(
            (&p + &q).evaluate(&at),
            &p.evaluate(&at) + &q.evaluate(&at)
        );
    }

    #[test]
    fn exact_division() {
        let n = s(&[-8, 0, 4]); // 4h^2 - 8
        let d = s(&[-2, 0, 1]); // h^2 - 2
        assert_eq!(n.div_exact(&d), Some(s(&[4])));
        assert_eq!(s(&[-1, 0, 1]).div_exact(&s(&[1, 1])), Some(s(&[-1, 1])));
        assert_eq!(s(&[1, 0, 1]).div_exact(&s(&[1, 1])), None);
        assert_eq!(s(&[1]).div_exact(&Scalar::zero()), None);
        assert_eq!(Scalar::zero().div_exact(&s(&[1, 1])), Some(Scalar::zero()));
    }

    #[test]
    fn display_expanded_descending() {
        assert_eq!(s(&[8, 0, -4]).to_string(), "-4h^2+8");
        assert_eq!(s(&[0]).to_string(), "0");
        assert_eq!(s(&[0, -1]).to_string(), "-h");
        assert_eq!(s(&[1, 0, 1]).to_string(), "h^2+1");
        assert_eq!(
            Scalar::monomial(Rational::new(1, 2), 1).to_string(),
            "(1/2)h"
        );
        assert_eq!(s(&[2, 0, -6]).to_string(), "-6h^2+2");
    }

    #[test]
    fn serde_as_coefficient_strings() {
        let p = s(&[2, 0, -1]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["2","0","-1"]"#);
        assert_eq!(serde_json::from_str::<Scalar>(&json).unwrap(), p);
        // Trailing zeros normalize away on load.
        assert_eq!(
            serde_json::from_str::<Scalar>(r#"["1/2","0"]"#).unwrap(),
            Scalar::constant(Rational::new(1, 2))
        );
        assert_eq!(serde_json::from_str::<Scalar>("[]").unwrap(), Scalar::zero());
    }
}
