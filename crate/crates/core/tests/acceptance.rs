//! End-to-end acceptance gate. Each test covers one deliverable and prints
//! a single pass line; every comparison is exact, with no tolerances.

use acbm3::curvature::{sectional, ConditionVerdict, CurvatureError};
use acbm3::f_tensor::{decompose, FError, FTensor};
use acbm3::lie_algebra::{AlgebraError, BianchiId, BianchiType, StructureConstants};
use acbm3::matrix::{
    basis, mat_specialize, ten3, ten4_specialize, vec3_from_i64, vec_specialize, DIM,
};
use acbm3::report::{ManifoldAnalysis, PipelineError};
use acbm3::scalar::{ExactRoot, Rational, Scalar, Sign};
use acbm3::verify::{run_all, VerificationReport};

fn analysis(ty: BianchiType, subtype: u8) -> ManifoldAnalysis {
    ManifoldAnalysis::for_catalog(&BianchiId::new(ty, subtype).unwrap()).unwrap()
}

fn group(report: &VerificationReport, prefix: &str) -> (usize, Vec<String>) {
    let mut total = 0;
    let mut failures = Vec::new();
    for c in &report.checks {
        if c.name.starts_with(prefix) {
            total += 1;
            if !c.passed {
                failures.push(format!(
                    "{}: {}",
                    c.name,
                    c.detail.clone().unwrap_or_default()
                ));
            }
        }
    }
    (total, failures)
}

fn assert_group(report: &VerificationReport, prefix: &str, expected: usize) {
    let (total, failures) = group(report, prefix);
    assert!(failures.is_empty(), "{prefix} failures:\n{}", failures.join("\n"));
    assert_eq!(total, expected, "{prefix} lost checks");
}

fn poly(coeffs: &[i64]) -> Scalar {
    Scalar::from_coeffs_i64(coeffs)
}

#[test]
fn catalog_classes_match_reference_table() {
    let report = run_all(None);
    assert_group(&report, "class/", 23);

    // Spot checks straight off the pipeline, independent of the suite.
    assert_eq!(analysis(BianchiType::I, 1).class.to_string(), "F0");
    assert!(analysis(BianchiType::I, 1).class.is_cosymplectic());
    assert_eq!(analysis(BianchiType::V, 1).class.to_string(), "F9");
    assert_eq!(
        analysis(BianchiType::VIh, 1).class.to_string(),
        "F5 (+) F10; at h = 0: F10"
    );
    println!("pass: all 23 catalog entries land in their reference classes");
}

#[test]
fn heisenberg_family_f_components() {
    let report = run_all(None);
    assert_group(&report, "f-components/", 3);

    let a = analysis(BianchiType::II, 1);
    assert_eq!(*a.f.component(2, 0, 0), Scalar::from_int(-1));
    assert_eq!(*a.f.component(0, 0, 2), Scalar::constant(Rational::new(-1, 2)));
    assert_eq!(a.parameters.theta3, Scalar::from_int(-1));
    assert_eq!(a.parameters.nu, Scalar::from_int(-1));

    let a = analysis(BianchiType::II, 3);
    assert!(a.parameters.theta3.is_zero());
    assert_eq!(a.parameters.lambda, Scalar::constant(Rational::new(1, 2)));
    assert_eq!(a.parameters.nu, Scalar::one());
    println!("pass: Heisenberg-family fundamental tensors match the worked values");
}

#[test]
fn vi_family_curvature_blocks() {
    let report = run_all(None);
    assert_group(&report, "curvature/vi-h/", 18);
    assert_group(&report, "nabla-phi-norm/vi-h/", 3);

    let a = analysis(BianchiType::VIh, 1);
    assert_eq!(a.curvature.tau, poly(&[0, 0, -6]));
    assert_eq!(*a.curvature.tensor.component(0, 1, 0, 1), poly(&[0, 0, -1]));
    let a = analysis(BianchiType::VIh, 3);
    assert_eq!(*a.curvature.tensor.component(0, 1, 1, 2), poly(&[0, 2]));
    assert_eq!(a.curvature.nabla_phi_norm, poly(&[10, 0, 10]));
    println!("pass: VI-family curvature blocks reproduced exactly");
}

#[test]
fn vii_family_curvature_blocks() {
    let report = run_all(None);
    assert_group(&report, "curvature/vii-h/", 18);
    assert_group(&report, "nabla-phi-norm/vii-h/", 3);

    let a = analysis(BianchiType::VIIh, 1);
    assert_eq!(a.curvature.tau_star, poly(&[0, 4]));
    assert_eq!(a.curvature.star_ricci[2][2], poly(&[0, 4]));
    let a = analysis(BianchiType::VIIh, 2);
    assert_eq!(*a.curvature.tensor.component(0, 1, 0, 2), poly(&[0, 2]));
    println!("pass: VII-family curvature blocks reproduced exactly");
}

#[test]
fn iff_conditions_and_exact_roots() {
    let report = run_all(None);
    assert_group(&report, "condition/", 40);

    let vi1 = analysis(BianchiType::VIh, 1);
    let zero = ExactRoot::from_int(0);
    assert_eq!(
        vi1.conditions.flat,
        ConditionVerdict::IffHIn {
            values: vec![zero.clone()]
        }
    );
    assert_eq!(vi1.conditions.flat.at_rational(&Rational::new(0, 1)), Some(true));
    assert_eq!(vi1.conditions.flat.at_rational(&Rational::new(-1, 1)), Some(false));
    assert_eq!(
        vi1.conditions.isotropic_cosymplectic,
        ConditionVerdict::IffHIn {
            values: vec![ExactRoot::surd(Rational::new(2, 1), Sign::Minus).unwrap()]
        }
    );

    let vii1 = analysis(BianchiType::VIIh, 1);
    assert_eq!(
        vii1.conditions.scalar_flat,
        ConditionVerdict::IffHIn {
            values: vec![ExactRoot::surd(Rational::new(1, 3), Sign::Plus).unwrap()]
        }
    );
    assert_eq!(
        vii1.conditions.eta_complex_einstein.solution,
        Some([poly(&[0, 0, -2]), poly(&[0, -2]), poly(&[2, 2])])
    );
    println!("pass: iff-conditions resolve to the exact roots");
}

#[test]
fn structural_invariants_and_specialization() {
    let samples: [Rational; 7] = [
        Rational::new(-2, 1),
        Rational::new(-1, 1),
        Rational::new(-1, 2),
        Rational::new(0, 1),
        Rational::new(1, 2),
        Rational::new(1, 1),
        Rational::new(2, 1),
    ];
    for id in BianchiId::all_rows() {
        let a = ManifoldAnalysis::for_catalog(&id).unwrap();
        assert!(a.structure.compatibility_failures().is_empty(), "{}", id.label());
        assert!(a.curvature.tensor.check_symmetries(), "{}", id.label());

        // Pinning h before the pipeline and after it must agree.
        for h in &samples {
            if !a.domain.contains_rational(h) {
                continue;
            }
            let pinned = a.specialized(h).unwrap();
            assert_eq!(
                ten4_specialize(a.curvature.tensor.components(), h),
                *pinned.curvature.tensor.components(),
                "{} at h = {h}",
                id.label()
            );
            assert_eq!(
                mat_specialize(&a.curvature.ricci, h),
                pinned.curvature.ricci,
                "{} at h = {h}",
                id.label()
            );
            assert_eq!(
                mat_specialize(&a.curvature.star_ricci, h),
                pinned.curvature.star_ricci,
                "{} at h = {h}",
                id.label()
            );
            assert_eq!(a.curvature.tau.specialize(h), pinned.curvature.tau);
            assert_eq!(
                a.curvature.nabla_phi_norm.specialize(h),
                pinned.curvature.nabla_phi_norm
            );
            let f = ten3(|i, j, k| a.f.component(i, j, k).specialize(h));
            assert_eq!(f, *pinned.f.components(), "{} at h = {h}", id.label());
            assert_eq!(vec_specialize(&a.lee.theta_star, h), pinned.lee.theta_star);
            for i in 0..DIM {
                for j in 0..DIM {
                    assert_eq!(
                        vec_specialize(a.connection.derivative(i, j), h),
                        *pinned.connection.derivative(i, j),
                        "{} nabla_e{} e{} at h = {h}",
                        id.label(),
                        i + 1,
                        j + 1
                    );
                }
            }
        }
    }
    println!("pass: structural invariants hold and specialization commutes with the pipeline");
}

#[test]
fn negative_controls_reject_bad_input() {
    // An antisymmetric table that fails the Jacobi identity.
    let broken = StructureConstants::from_brackets(
        vec3_from_i64([0, 0, 1]),
        vec3_from_i64([0, 1, 0]),
        vec3_from_i64([0, 0, -1]),
    );
    match ManifoldAnalysis::for_custom("broken", broken) {
        Err(PipelineError::Algebra(AlgebraError::JacobiFailure)) => {}
        other => panic!("expected Jacobi rejection, got {other:?}"),
    }

    // A fundamental tensor violating a defining identity is named in the error.
    let good = analysis(BianchiType::II, 1);
    let mut components = good.f.components().clone();
    components[2][0][0] = Scalar::from_int(5);
    assert_eq!(
        decompose(&FTensor::new(components)),
        Err(FError::BrokenIdentity {
            identity: "F_311 = F_322".to_string()
        })
    );

    // Sections on which the metric degenerates have no sectional curvature.
    let err = sectional(
        &good.curvature.tensor,
        &good.structure.g,
        &basis(2),
        &vec3_from_i64([1, 1, 0]),
    )
    .unwrap_err();
    assert_eq!(err, CurvatureError::DegenerateSection);

    // Catalog coordinates are validated.
    assert_eq!(
        BianchiId::new(BianchiType::I, 2).unwrap_err(),
        AlgebraError::InvalidSubtype {
            ty: BianchiType::I,
            subtype: 2
        }
    );
    assert!(matches!(
        BianchiId::new(BianchiType::V, 1).unwrap().with_h(Rational::new(1, 1)),
        Err(AlgebraError::NotParametric(BianchiType::V))
    ));
    println!("pass: inadmissible and malformed inputs are rejected with named errors");
}
