//! Property tests for the exact scalar layer and the bracket algebra:
//! commutative ring axioms, evaluation as a ring homomorphism, canonical
//! form stability, recovery of constructed roots and serialization round
//! trips.

use acbm3::lie_algebra::{catalog_algebra, BianchiId, BianchiType, StructureConstants};
use acbm3::matrix::{vec3_from_i64, vec_add, vec_scale};
use acbm3::scalar::{ExactRoot, Rational, Scalar};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(p, q)| Rational::new(p, q))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    proptest::collection::vec(rational(), 0..5).prop_map(Scalar::from_coeffs)
}

proptest! {
    #[test]
    fn addition_commutes(p in scalar(), q in scalar()) {
        prop_assert_eq!(&p + &q, &q + &p);
    }

    #[test]
    fn multiplication_commutes(p in scalar(), q in scalar()) {
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn addition_associates(p in scalar(), q in scalar(), r in scalar()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
    }

    #[test]
    fn multiplication_associates(p in scalar(), q in scalar(), r in scalar()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn multiplication_distributes(p in scalar(), q in scalar(), r in scalar()) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(p in scalar(), q in scalar(), x in rational()) {
        prop_assert_eq!((&p + &q).evaluate(&x), &p.evaluate(&x) + &q.evaluate(&x));
        prop_assert_eq!((&p * &q).evaluate(&x), &p.evaluate(&x) * &q.evaluate(&x));
    }

    #[test]
    fn trailing_zero_coefficients_are_trimmed(coeffs in proptest::collection::vec(rational(), 0..5), pad in 0usize..4) {
        let mut padded = coeffs.clone();
        padded.extend(std::iter::repeat(Rational::new(0, 1)).take(pad));
        prop_assert_eq!(Scalar::from_coeffs(padded), Scalar::from_coeffs(coeffs));
    }

    #[test]
    fn product_degrees_add(p in scalar(), q in scalar()) {
        let prod = &p * &q;
        match (p.degree(), q.degree()) {
            // The rationals have no zero divisors, so degrees are additive.
            (Some(dp), Some(dq)) => prop_assert_eq!(prod.degree(), Some(dp + dq)),
            _ => prop_assert!(prod.is_zero()),
        }
    }

    #[test]
    fn constructed_rational_roots_are_recovered(r1 in rational(), r2 in rational()) {
        // p = (h - r1)(h - r2), expanded by hand.
        let p = Scalar::from_coeffs(vec![
            &r1 * &r2,
            -&(&r1 + &r2),
            Rational::new(1, 1),
        ]);
        let roots = p.exact_roots().unwrap();
        let mut expected = vec![ExactRoot::Rational(r1), ExactRoot::Rational(r2)];
        expected.sort();
        expected.dedup();
        prop_assert_eq!(&roots, &expected);
        for root in &roots {
            prop_assert!(p.vanishes_at(root));
        }
    }

    #[test]
    fn specialization_agrees_with_evaluation(p in scalar(), x in rational()) {
        let pinned = p.specialize(&x);
        prop_assert!(pinned.is_constant());
        prop_assert_eq!(pinned.evaluate(&Rational::new(0, 1)), p.evaluate(&x));
    }

    #[test]
    fn rational_serde_round_trips(x in rational()) {
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), x);
    }

    #[test]
    fn scalar_serde_round_trips(p in scalar()) {
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Scalar>(&json).unwrap(), p);
    }

    #[test]
    fn surd_canonicalization_round_trips(num in 0i64..60, den in 1i64..20) {
        // Perfect squares collapse to the rational form; either way the
        // value survives serialization unchanged.
        let root = ExactRoot::surd(Rational::new(num, den), acbm3::scalar::Sign::Minus).unwrap();
        let json = serde_json::to_string(&root).unwrap();
        prop_assert_eq!(serde_json::from_str::<ExactRoot>(&json).unwrap(), root);
    }

    #[test]
    fn bracket_is_bilinear(
        x in proptest::array::uniform3(-4i64..5),
        y in proptest::array::uniform3(-4i64..5),
        z in proptest::array::uniform3(-4i64..5),
        a in -4i64..5,
        b in -4i64..5,
    ) {
        let sc = catalog_algebra(&BianchiId::new(BianchiType::VIII, 1).unwrap());
        let (x, y, z) = (vec3_from_i64(x), vec3_from_i64(y), vec3_from_i64(z));
        let combo = vec_add(
            &vec_scale(&Scalar::from_int(a), &x),
            &vec_scale(&Scalar::from_int(b), &y),
        );
        let lhs = sc.bracket(&combo, &z);
        let rhs = vec_add(
            &vec_scale(&Scalar::from_int(a), &sc.bracket(&x, &z)),
            &vec_scale(&Scalar::from_int(b), &sc.bracket(&y, &z)),
        );
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_tables_serde_round_trip(
        b12 in proptest::array::uniform3(-3i64..4),
        b23 in proptest::array::uniform3(-3i64..4),
        b31 in proptest::array::uniform3(-3i64..4),
    ) {
        let sc = StructureConstants::from_brackets(
            vec3_from_i64(b12),
            vec3_from_i64(b23),
            vec3_from_i64(b31),
        );
        let json = serde_json::to_string(&sc).unwrap();
        prop_assert_eq!(serde_json::from_str::<StructureConstants>(&json).unwrap(), sc);
    }
}
