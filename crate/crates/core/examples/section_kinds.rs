//! Classifies 2-plane sections relative to the structure (totally real,
//! phi-holomorphic, xi-sections) and computes their exact sectional
//! curvatures, including a plane on which the metric degenerates.

use acbm3::curvature::{section_kinds, sectional};
use acbm3::lie_algebra::{BianchiId, BianchiType};
use acbm3::matrix::{basis, vec3_from_i64};
use acbm3::report::ManifoldAnalysis;

fn main() {
    let id = BianchiId::new(BianchiType::VIIh, 1).unwrap();
    let a = ManifoldAnalysis::for_catalog(&id).unwrap();

    let sections = [
        ("e1 ^ e2", basis(0), basis(1)),
        ("e1 ^ e3", basis(0), basis(2)),
        ("e2 ^ e3", basis(1), basis(2)),
        ("(e1+e3) ^ e2", vec3_from_i64([1, 0, 1]), basis(1)),
    ];
    println!("sections of {}", id.label());
    for (label, x, y) in sections {
        let kinds = section_kinds(&a.structure, &x, &y).unwrap();
        let kinds: Vec<String> = kinds.iter().map(ToString::to_string).collect();
        let k = sectional(&a.curvature.tensor, &a.structure.g, &x, &y).unwrap();
        println!("  {label:<14} {:<28} k = {k}", kinds.join(" + "));
    }

    // The restriction of g to span(e3, e1+e2) is degenerate, so no
    // sectional curvature exists there.
    let err = sectional(
        &a.curvature.tensor,
        &a.structure.g,
        &basis(2),
        &vec3_from_i64([1, 1, 0]),
    )
    .unwrap_err();
    println!();
    println!("e3 ^ (e1+e2): {err}");

    // Linearly dependent vectors do not span a plane at all.
    let err = sectional(
        &a.curvature.tensor,
        &a.structure.g,
        &vec3_from_i64([1, 2, 0]),
        &vec3_from_i64([2, 4, 0]),
    )
    .unwrap_err();
    println!("(e1+2e2) ^ (2e1+4e2): {err}");
}
