//! Feeds a hand-written bracket table through the full pipeline. The JSON
//! file next to this example uses the same format the CLI accepts via
//! `--input`, and the second half shows how a table that fails the Jacobi
//! identity is rejected.

use std::fs;
use std::path::Path;

use acbm3::lie_algebra::StructureConstants;
use acbm3::matrix::vec3_from_i64;
use acbm3::report::ManifoldAnalysis;

fn main() {
    let path =
        Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data/custom_bia_ii_1.json");
    let text = fs::read_to_string(&path).unwrap();
    let algebra: StructureConstants = serde_json::from_str(&text).unwrap();

    println!("brackets: {}", algebra.bracket_text().join("; "));
    let a = ManifoldAnalysis::for_custom("heisenberg", algebra).unwrap();
    println!("class:    {}", a.class);
    println!("tau = {}, tau* = {}", a.curvature.tau, a.curvature.tau_star);
    println!("square norm of nabla phi = {}", a.curvature.nabla_phi_norm);

    // Antisymmetry alone does not make a bracket table a Lie algebra; the
    // pipeline rejects tables that fail the Jacobi identity.
    let broken = StructureConstants::from_brackets(
        vec3_from_i64([0, 0, 1]),
        vec3_from_i64([0, 1, 0]),
        vec3_from_i64([0, 0, -1]),
    );
    println!();
    match ManifoldAnalysis::for_custom("broken", broken) {
        Ok(_) => unreachable!("the broken table must not classify"),
        Err(e) => println!("broken table rejected: {e}"),
    }
}
