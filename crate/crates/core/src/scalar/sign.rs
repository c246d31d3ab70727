//! Admissible ranges of the family parameter and exact sign analysis.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ExactRoot, Rational, Scalar};

/// Range of the family parameter `h` on which an algebra family is defined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HDomain {
    /// Every rational h.
    All,
    /// h <= 0.
    NonPositive,
    /// h >= 0.
    NonNegative,
}

impl HDomain {
    pub fn contains_rational(&self, h: &Rational) -> bool {
        match self {
            HDomain::All => true,
            HDomain::NonPositive => !h.is_positive(),
            HDomain::NonNegative => !h.is_negative(),
        }
    }

    pub fn contains_root(&self, root: &ExactRoot) -> bool {
        match self {
            HDomain::All => true,
            HDomain::NonPositive => root.sign_vs_zero() != Ordering::Greater,
            HDomain::NonNegative => root.sign_vs_zero() != Ordering::Less,
        }
    }
}

impl fmt::Display for HDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HDomain::All => write!(f, "all h"),
            HDomain::NonPositive => write!(f, "h <= 0"),
            HDomain::NonNegative => write!(f, "h >= 0"),
        }
    }
}

/// Sign of a polynomial over a whole domain of h values.
///
/// `NonNegative` and `NonPositive` mean the weak bound holds and the value
/// zero is attained somewhere in the domain; `Mixed` means both strict signs
/// occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignVerdict {
    Zero,
    Positive,
    NonNegative,
    NonPositive,
    Negative,
    Mixed,
    /// Degree too high for the exact case analysis.
    Undetermined,
}

impl fmt::Display for SignVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            SignVerdict::Zero => "identically zero",
            SignVerdict::Positive => "positive",
            SignVerdict::NonNegative => "non-negative",
            SignVerdict::NonPositive => "non-positive",
            SignVerdict::Negative => "negative",
            SignVerdict::Mixed => "of mixed sign",
            SignVerdict::Undetermined => "of undetermined sign",
        };
        write!(f, "{text}")
    }
}

/// Exact sign of `p` over every h in `domain`, decided without sampling.
///
/// Degrees up to 2 admit a complete case analysis from the leading
/// coefficient, the boundary value and the vertex; higher degrees report
/// [`SignVerdict::Undetermined`].
pub fn sign_on_domain(p: &Scalar, domain: HDomain) -> SignVerdict {
    match p.degree() {
        None => SignVerdict::Zero,
        Some(0) => sign_of(&p.coeff(0)),
        Some(1) => match domain {
            HDomain::All => SignVerdict::Mixed,
            HDomain::NonNegative => linear_on_right_half(&p.coeff(1), &p.coeff(0)),
            // Reflect h -> -h onto the right half line.
            HDomain::NonPositive => linear_on_right_half(&(-&p.coeff(1)), &p.coeff(0)),
        },
        Some(2) => {
            let (a, b, c) = (p.coeff(2), p.coeff(1), p.coeff(0));
            match domain {
                HDomain::All => quadratic_on_line(&a, &b, &c),
                HDomain::NonNegative => quadratic_on_right_half(&a, &b, &c),
                HDomain::NonPositive => quadratic_on_right_half(&a, &(-&b), &c),
            }
        }
        Some(_) => SignVerdict::Undetermined,
    }
}

fn sign_of(c: &Rational) -> SignVerdict {
    if c.is_zero() {
        SignVerdict::Zero
    } else if c.is_positive() {
        SignVerdict::Positive
    } else {
        SignVerdict::Negative
    }
}

/// `b h + c` on `[0, inf)` with `b != 0`.
fn linear_on_right_half(b: &Rational, c: &Rational) -> SignVerdict {
    if b.is_positive() {
        // Range [c, inf).
        if c.is_positive() {
            SignVerdict::Positive
        } else if c.is_zero() {
            SignVerdict::NonNegative
        } else {
            SignVerdict::Mixed
        }
    } else {
        // Range (-inf, c].
        if c.is_negative() {
            SignVerdict::Negative
        } else if c.is_zero() {
            SignVerdict::NonPositive
        } else {
            SignVerdict::Mixed
        }
    }
}

/// `a h^2 + b h + c` on the whole line with `a != 0`.
fn quadratic_on_line(a: &Rational, b: &Rational, c: &Rational) -> SignVerdict {
    let disc = &(b * b) - &(&(&Rational::from_int(4) * a) * c);
    if disc.is_negative() {
        return sign_of(a);
    }
    if disc.is_zero() {
        return if a.is_positive() {
            SignVerdict::NonNegative
        } else {
            SignVerdict::NonPositive
        };
    }
    SignVerdict::Mixed
}

/// `a h^2 + b h + c` on `[0, inf)` with `a != 0`. The extremum over the
/// domain sits at the vertex when the vertex lies in the domain, otherwise
/// at the boundary point 0.
fn quadratic_on_right_half(a: &Rational, b: &Rational, c: &Rational) -> SignVerdict {
    let vertex = -&(b / &(&Rational::from_int(2) * a));
    let extremum = if vertex.is_positive() {
        // p(vertex) = c - b^2 / (4a)
        c - &(&(b * b) / &(&Rational::from_int(4) * a))
    } else {
        c.clone()
    };
    if a.is_positive() {
        // Minimum is the extremum; the polynomial grows without bound.
        if extremum.is_positive() {
            SignVerdict::Positive
        } else if extremum.is_zero() {
            SignVerdict::NonNegative
        } else {
            SignVerdict::Mixed
        }
    } else {
        // Maximum is the extremum; the polynomial falls without bound.
        if extremum.is_negative() {
            SignVerdict::Negative
        } else if extremum.is_zero() {
            SignVerdict::NonPositive
        } else {
            SignVerdict::Mixed
        }
    }
}
