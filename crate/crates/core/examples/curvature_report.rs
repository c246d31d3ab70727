//! The full curvature picture of one parametric family entry: tensor
//! components, Ricci tensors, scalar curvatures, sectional curvatures and
//! the conditions they decide, all as exact polynomials in h.

use acbm3::lie_algebra::{BianchiId, BianchiType};
use acbm3::matrix::Mat3;
use acbm3::report::ManifoldAnalysis;
use acbm3::scalar::Rational;

fn matrix(m: &Mat3) -> String {
    let row = |i: usize| format!("{}, {}, {}", m[i][0], m[i][1], m[i][2]);
    format!("[{}; {}; {}]", row(0), row(1), row(2))
}

fn main() {
    let id = BianchiId::new(BianchiType::VIIh, 1).unwrap();
    let a = ManifoldAnalysis::for_catalog(&id).unwrap();
    let rep = &a.curvature;

    println!("curvature of {}  (domain: {})", id.label(), a.domain);
    println!();
    println!("independent tensor components");
    for line in rep.tensor.nonzero_components() {
        println!("  {line}");
    }
    println!();
    println!("rho  = {}", matrix(&rep.ricci));
    println!("rho* = {}", matrix(&rep.star_ricci));
    println!("tau  = {}", rep.tau);
    println!("tau* = {}", rep.tau_star);
    println!("square norm of nabla phi = {}", rep.nabla_phi_norm);
    println!(
        "k(e1,e2) = {}; k(e1,e3) = {}; k(e2,e3) = {}",
        rep.k[0], rep.k[1], rep.k[2]
    );

    let c = &a.conditions;
    println!();
    println!("conditions over the whole domain");
    println!("  flat:                  {}", c.flat);
    println!("  scalar-flat:           {}", c.scalar_flat);
    println!("  *-scalar-flat:         {}", c.star_scalar_flat);
    println!("  isotropic-cosymplectic: {}", c.isotropic_cosymplectic);
    println!("  einstein:              {}", c.einstein);
    print!("  eta-complex-einstein:  {}", c.eta_complex_einstein.verdict);
    if let Some([lambda, mu, nu]) = &c.eta_complex_einstein.solution {
        print!(" with lambda = {lambda}, mu = {mu}, nu = {nu}");
    }
    println!();

    // Pinning h turns polynomial invariants into numbers.
    let pinned = a.specialized(&Rational::new(1, 1)).unwrap();
    println!();
    println!("pinned at h = 1");
    println!("  tau = {}", pinned.curvature.tau);
    println!(
        "  square norm of nabla phi = {}",
        pinned.curvature.nabla_phi_norm
    );
    println!("  isotropic-cosymplectic: {}", pinned.conditions.isotropic_cosymplectic);
}
