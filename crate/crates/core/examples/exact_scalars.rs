//! The exact scalar layer underneath everything else: arbitrary precision
//! rationals, polynomials in the family parameter h and exact roots, with
//! sign decisions restricted to a parameter domain.

use acbm3::scalar::{sign_on_domain, HDomain, Rational, Scalar};

fn main() {
    // Rationals never round. This example would overflow any fixed-width
    // numerator long before the arithmetic gets interesting.
    let a = Rational::new(1, 3_000_000_019);
    let b = Rational::new(1, 3_000_000_037);
    println!("a + b = {}", &a + &b);

    // Polynomials in h with rational coefficients.
    let norm = Scalar::from_coeffs_i64(&[8, 0, -4]); // the square norm 8 - 4h^2
    println!();
    println!("p       = {norm}");
    println!("p(0)    = {}", norm.evaluate(&Rational::new(0, 1)));
    println!("p(3/2)  = {}", norm.evaluate(&Rational::new(3, 2)));
    println!("p * p   = {}", &norm * &norm);

    // Roots are extracted exactly, not approximated. 8 - 4h^2 vanishes at
    // the two square roots of 2.
    println!();
    for root in norm.exact_roots().unwrap() {
        println!("root {root}: p vanishes there: {}", norm.vanishes_at(&root));
    }

    // Sign decisions depend on the domain of the parameter.
    let tau = Scalar::from_coeffs_i64(&[0, 0, -6]); // -6h^2
    let odd = Scalar::from_coeffs_i64(&[0, 6]); // 6h
    println!();
    for (name, p) in [("-6h^2", &tau), ("6h", &odd), ("8-4h^2", &norm)] {
        println!(
            "{name:>7} is {} on all h, {} on h <= 0, {} on h >= 0",
            sign_on_domain(p, HDomain::All),
            sign_on_domain(p, HDomain::NonPositive),
            sign_on_domain(p, HDomain::NonNegative),
        );
    }
}
