//! Exact scalar arithmetic.
//!
//! Every quantity in the engine is a polynomial in the family parameter `h`
//! with arbitrary-precision rational coefficients. Structure constants,
//! connection coefficients, curvature components and classification
//! parameters are all values of this one scalar type, so results hold as
//! polynomial identities rather than floating-point approximations.

mod poly;
mod rational;
mod root;
mod sign;

pub use poly::Scalar;
pub use rational::Rational;
pub use root::{ExactRoot, Sign};
pub use sign::{sign_on_domain, HDomain, SignVerdict};

use thiserror::Error;

/// Errors from exact scalar arithmetic and root extraction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    /// A rational was constructed or parsed with denominator zero.
    #[error("denominator is zero")]
    ZeroDenominator,
    /// The text is not a valid `p` or `p/q` rational.
    #[error("cannot parse {0:?} as an exact rational")]
    InvalidRational(String),
    /// Root extraction on the zero polynomial: every h is a root, so the
    /// condition holds for all h instead of on a finite set.
    #[error("polynomial is identically zero, so it vanishes for every h")]
    ZeroPolynomial,
    /// Root extraction is only exact through quadratics.
    #[error("exact root extraction supports degree at most 2, got degree {0}")]
    UnsupportedDegree(usize),
    /// A quadratic whose roots are `r +/- sqrt(s)` with `r != 0` and `sqrt(s)`
    /// irrational; such roots have no representation as a rational or a pure
    /// square root and are reported instead of being approximated.
    #[error("roots of {0} fall outside the supported exact forms (rational or pure square root)")]
    UnsupportedRootForm(String),
    /// A square root of a negative rational was requested.
    #[error("square root of the negative rational {0}")]
    NegativeRadicand(String),
}
