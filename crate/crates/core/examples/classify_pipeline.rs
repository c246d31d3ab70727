//! Runs the classification pipeline stage by stage on a single catalog
//! entry: bracket table, Levi-Civita connection, fundamental tensor, Lee
//! forms, class parameters and finally the class itself.

use acbm3::lie_algebra::{BianchiId, BianchiType};
use acbm3::matrix::Vec3;
use acbm3::report::ManifoldAnalysis;
use acbm3::scalar::Scalar;

fn covector(v: &Vec3) -> String {
    format!("({}, {}, {})", v[0], v[1], v[2])
}

fn main() {
    let id = BianchiId::new(BianchiType::IV, 1).unwrap();
    let a = ManifoldAnalysis::for_catalog(&id).unwrap();

    println!("entry     {}", id.label());
    println!("brackets  {}", a.algebra.bracket_text().join("; "));

    println!();
    println!("Levi-Civita connection on the basis");
    for line in a.connection.nonzero_derivatives() {
        println!("  {line}");
    }

    println!();
    println!("fundamental tensor F(x,y,z) = g((nabla_x phi)y, z)");
    for line in a.f.nonzero_components() {
        println!("  {line}");
    }

    println!();
    println!("Lee forms");
    println!("  theta  = {}", covector(&a.lee.theta));
    println!("  theta* = {}", covector(&a.lee.theta_star));
    println!("  omega  = {}", covector(&a.lee.omega));

    let p = &a.parameters;
    let named: [(&str, &Scalar); 9] = [
        ("theta_1", &p.theta1),
        ("theta_2", &p.theta2),
        ("theta_3", &p.theta3),
        ("lambda", &p.lambda),
        ("theta*_3", &p.theta_star3),
        ("mu", &p.mu),
        ("nu", &p.nu),
        ("omega_1", &p.omega1),
        ("omega_2", &p.omega2),
    ];
    println!();
    println!("nonzero class parameters");
    for (name, value) in named {
        if !value.is_zero() {
            println!("  {name} = {value}");
        }
    }

    println!();
    println!("class: {}", a.class);
}
