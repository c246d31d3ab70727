//! Exact real roots of low-degree polynomials.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Rational, Scalar, ScalarError};

/// Sign of a square-root branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_i8(match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        })
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match i8::deserialize(deserializer)? {
            -1 => Ok(Sign::Minus),
            1 => Ok(Sign::Plus),
            n => Err(serde::de::Error::custom(format!(
                "sign must be -1 or 1, got {n}"
            ))),
        }
    }
}

/// Exact real algebraic number of the two shapes the engine produces: a
/// rational, or a pure quadratic surd `+/- sqrt(radicand)`.
///
/// Surds are canonical: the radicand is positive and never a perfect square
/// of a rational (those collapse to the rational form), so a surd is always
/// irrational and the two shapes never alias.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExactRoot {
    Rational(Rational),
    Surd { radicand: Rational, sign: Sign },
}

impl ExactRoot {
    pub fn from_int(n: i64) -> Self {
        ExactRoot::Rational(Rational::from_int(n))
    }

    /// Builds `sign * sqrt(radicand)`, collapsing perfect squares to the
    /// rational form. Negative radicands are rejected.
    pub fn surd(radicand: Rational, sign: Sign) -> Result<Self, ScalarError> {
        match radicand.sqrt_exact()? {
            Some(r) => Ok(ExactRoot::Rational(match sign {
                Sign::Minus => -r,
                Sign::Plus => r,
            })),
            None => Ok(ExactRoot::Surd { radicand, sign }),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            ExactRoot::Rational(r) => Some(r),
            ExactRoot::Surd { .. } => None,
        }
    }

    /// Exact comparison against zero.
    pub fn sign_vs_zero(&self) -> Ordering {
        match self {
            ExactRoot::Rational(r) => {
                if r.is_zero() {
                    Ordering::Equal
                } else if r.is_negative() {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            // Canonical surds are irrational, hence never zero.
            ExactRoot::Surd { sign: Sign::Minus, .. } => Ordering::Less,
            ExactRoot::Surd { sign: Sign::Plus, .. } => Ordering::Greater,
        }
    }
}

impl fmt::Display for ExactRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactRoot::Rational(r) => write!(f, "{r}"),
            ExactRoot::Surd { radicand, sign } => {
                if sign.is_minus() {
                    write!(f, "-")?;
                }
                write!(f, "sqrt({radicand})")
            }
        }
    }
}

impl Ord for ExactRoot {
    /// Total numeric order, decided exactly by comparing signs first and
    /// squares within a common sign.
    fn cmp(&self, other: &Self) -> Ordering {
        use ExactRoot::{Rational as Rat, Surd};
        match (self, other) {
            (Rat(a), Rat(b)) => a.cmp(b),
            (Rat(a), Surd { radicand, sign }) => cmp_rational_surd(a, radicand, *sign),
            (Surd { radicand, sign }, Rat(b)) => cmp_rational_surd(b, radicand, *sign).reverse(),
            (
                Surd { radicand: p, sign: s },
                Surd { radicand: q, sign: t },
            ) => match (s, t) {
                (Sign::Minus, Sign::Plus) => Ordering::Less,
                (Sign::Plus, Sign::Minus) => Ordering::Greater,
                (Sign::Plus, Sign::Plus) => p.cmp(q),
                (Sign::Minus, Sign::Minus) => q.cmp(p),
            },
        }
    }
}

impl PartialOrd for ExactRoot {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compares a rational `a` with `sign * sqrt(p)`; equality cannot occur
/// because canonical surds are irrational.
fn cmp_rational_surd(a: &Rational, p: &Rational, sign: Sign) -> Ordering {
    match sign {
        Sign::Plus => {
            if !a.is_positive() {
                Ordering::Less
            } else {
                (&(a * a)).cmp(p)
            }
        }
        Sign::Minus => {
            if !a.is_negative() {
                Ordering::Greater
            } else {
                p.cmp(&(a * a))
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum RootRepr {
    Rational { value: Rational },
    Surd { radicand: Rational, sign: Sign },
}

impl Serialize for ExactRoot {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = match self {
            ExactRoot::Rational(r) => RootRepr::Rational { value: r.clone() },
            ExactRoot::Surd { radicand, sign } => RootRepr::Surd {
                radicand: radicand.clone(),
                sign: *sign,
            },
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactRoot {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match RootRepr::deserialize(deserializer)? {
            RootRepr::Rational { value } => Ok(ExactRoot::Rational(value)),
            RootRepr::Surd { radicand, sign } => {
                ExactRoot::surd(radicand, sign).map_err(serde::de::Error::custom)
            }
        }
    }
}

impl Scalar {
    /// All real roots, exactly represented, sorted ascending and listed once
    /// regardless of multiplicity.
    ///
    /// The zero polynomial vanishes everywhere and reports
    /// [`ScalarError::ZeroPolynomial`] so callers can turn it into a
    /// "holds for all h" outcome instead of a root list. Degrees above 2 and
    /// quadratics whose roots are irrational but not pure square roots are
    /// reported as unsupported rather than approximated.
    pub fn exact_roots(&self) -> Result<Vec<ExactRoot>, ScalarError> {
        match self.degree() {
            None => Err(ScalarError::ZeroPolynomial),
            Some(0) => Ok(Vec::new()),
            Some(1) => {
                let root = -&(&self.coeff(0) / &self.coeff(1));
                Ok(vec![ExactRoot::Rational(root)])
            }
            Some(2) => self.quadratic_roots(),
            Some(d) => Err(ScalarError::UnsupportedDegree(d)),
        }
    }

    fn quadratic_roots(&self) -> Result<Vec<ExactRoot>, ScalarError> {
        let (a, b, c) = (self.coeff(2), self.coeff(1), self.coeff(0));
        let four_ac = &(&Rational::from_int(4) * &a) * &c;
        let disc = &(&b * &b) - &four_ac;
        if disc.is_negative() {
            return Ok(Vec::new());
        }
        let two_a = &Rational::from_int(2) * &a;
        if disc.is_zero() {
            return Ok(vec![ExactRoot::Rational(-&(&b / &two_a))]);
        }
        if let Some(s) = disc.sqrt_exact()? {
            let neg_b = -&b;
            let mut roots = vec![
                ExactRoot::Rational(&(&neg_b - &s) / &two_a),
                ExactRoot::Rational(&(&neg_b + &s) / &two_a),
            ];
            roots.sort();
            return Ok(roots);
        }
        if b.is_zero() {
            // a h^2 + c with -c/a positive and not a perfect square.
            let radicand = -&(&c / &a);
            return Ok(vec![
                ExactRoot::surd(radicand.clone(), Sign::Minus)?,
                ExactRoot::surd(radicand, Sign::Plus)?,
            ]);
        }
        Err(ScalarError::UnsupportedRootForm(self.to_string()))
    }
}
