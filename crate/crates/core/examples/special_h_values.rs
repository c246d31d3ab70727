//! Pins the family parameter of a parametric catalog entry to concrete
//! rational values and compares each specialized picture with the symbolic
//! one, including the degenerate class at h = 0.

use acbm3::lie_algebra::{BianchiId, BianchiType};
use acbm3::report::ManifoldAnalysis;
use acbm3::scalar::Rational;

fn main() {
    let id = BianchiId::new(BianchiType::VIh, 1).unwrap();
    let symbolic = ManifoldAnalysis::for_catalog(&id).unwrap();

    println!("{}  (domain: {})", id.label(), symbolic.domain);
    println!("  class: {}", symbolic.class);
    println!("  tau  = {}", symbolic.curvature.tau);
    println!("  flat: {}", symbolic.conditions.flat);
    match symbolic.thurston() {
        Some(g) => println!("  Thurston geometry: {g}"),
        None => println!("  Thurston geometry: undetermined while h is symbolic"),
    }

    for v in [0i64, -1, -2] {
        let h = Rational::new(v, 1);
        let pinned = symbolic.specialized(&h).unwrap();
        println!();
        println!("pinned at h = {v}");
        println!("  class: {}", pinned.class);
        println!("  tau  = {}", pinned.curvature.tau);
        println!("  flat: {}", pinned.conditions.flat);
        match pinned.thurston() {
            Some(g) => println!("  Thurston geometry: {g}"),
            None => println!("  Thurston geometry: none"),
        }
        // The symbolic verdict, asked at the pinned value, must agree.
        let from_symbolic = symbolic.conditions.flat.at_rational(&h).unwrap();
        assert_eq!(from_symbolic, pinned.curvature.tensor.is_zero());
    }

    // Values outside the family domain still compute, but carry a warning.
    let outside = symbolic.specialized(&Rational::new(1, 1)).unwrap();
    println!();
    for w in outside.warnings() {
        println!("warning: {w}");
    }
    println!("  class at h = 1: {}", outside.class);
}
