//! Levi-Civita connection of a left-invariant metric.
//!
//! On a Lie group with left-invariant metric the Koszul formula loses its
//! derivative terms, because all inner products of invariant fields are
//! constant:
//!
//! ```text
//! 2 g(nabla_{e_i} e_j, e_k) = g([e_i,e_j], e_k)
//!                           + g([e_k,e_i], e_j)
//!                           + g([e_k,e_j], e_i).
//! ```
//!
//! `levi_civita` solves this for the coefficient table and
//! `check_connection` confirms the two defining properties (zero torsion,
//! parallel metric) directly from the table, so the two functions validate
//! each other without sharing a derivation.

use crate::acb_structure::{metric_inverse, StructureError};
use crate::lie_algebra::{render_combination, StructureConstants};
use crate::matrix::{basis, bilinear, mat_vec, ten3, vec3, Mat3, Ten3, Vec3, DIM};
use crate::scalar::{Rational, Scalar};

/// Connection coefficients `gamma[i][j]` = coordinates of
/// `nabla_{e_{i+1}} e_{j+1}` in the fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionCoefficients {
    gamma: Ten3,
}

impl ConnectionCoefficients {
    pub fn new(gamma: Ten3) -> Self {
        ConnectionCoefficients { gamma }
    }

    /// `nabla_{e_{i+1}} e_{j+1}` as a coordinate vector.
    pub fn derivative(&self, i: usize, j: usize) -> &Vec3 {
        &self.gamma[i][j]
    }

    /// Coefficient of `e_{m+1}` in `nabla_{e_{i+1}} e_{j+1}`.
    pub fn coefficient(&self, i: usize, j: usize, m: usize) -> &Scalar {
        &self.gamma[i][j][m]
    }

    /// `nabla_v w` for left-invariant fields with the given constant
    /// coordinates.
    pub fn derive(&self, v: &Vec3, w: &Vec3) -> Vec3 {
        vec3(|m| {
            let mut acc = Scalar::zero();
            for i in 0..DIM {
                for j in 0..DIM {
                    acc = &acc + &(&(&v[i] * &w[j]) * &self.gamma[i][j][m]);
                }
            }
            acc
        })
    }

    /// The nonzero covariant derivatives rendered as
    /// `nabla_e1 e1 = he3`, in row-major order.
    pub fn nonzero_derivatives(&self) -> Vec<String> {
        let mut out = Vec::new();
        for i in 0..DIM {
            for j in 0..DIM {
                if !crate::matrix::vec_is_zero(&self.gamma[i][j]) {
                    out.push(format!(
                        "nabla_e{} e{} = {}",
                        i + 1,
                        j + 1,
                        render_combination(&self.gamma[i][j])
                    ));
                }
            }
        }
        out
    }
}

/// Levi-Civita connection of the metric `g` on the algebra `sc`, from the
/// invariant Koszul formula.
pub fn levi_civita(
    sc: &StructureConstants,
    g: &Mat3,
) -> Result<ConnectionCoefficients, StructureError> {
    let g_inv = metric_inverse(g)?;
    let half = Rational::new(1, 2);
    // b(i, j, k) = g([e_i, e_j], e_k).
    let b = |i: usize, j: usize, k: usize| -> Scalar {
        bilinear(g, &sc.constants()[i][j], &basis(k))
    };
    let gamma = ten3(|i, j, m| {
        // rhs_k = g(nabla_{e_i} e_j, e_k).
        let rhs = vec3(|k| (&(&b(i, j, k) + &b(k, i, j)) + &b(k, j, i)).scale(&half));
        mat_vec(&g_inv, &rhs)[m].clone()
    });
    Ok(ConnectionCoefficients { gamma })
}

/// Confirms that `gamma` is the Levi-Civita connection of `g` on `sc` by
/// checking the defining properties on the basis:
/// `nabla_{e_i} e_j - nabla_{e_j} e_i = [e_i, e_j]` and
/// `g(nabla_{e_i} e_j, e_k) + g(e_j, nabla_{e_i} e_k) = 0`.
pub fn check_connection(
    sc: &StructureConstants,
    g: &Mat3,
    gamma: &ConnectionCoefficients,
) -> bool {
    for i in 0..DIM {
        for j in 0..DIM {
            for m in 0..DIM {
                let torsion = &(&gamma.gamma[i][j][m] - &gamma.gamma[j][i][m]) - sc.c(i, j, m);
                if !torsion.is_zero() {
                    return false;
                }
            }
            for k in 0..DIM {
                let lhs = &bilinear(g, &gamma.gamma[i][j], &basis(k))
                    + &bilinear(g, &basis(j), &gamma.gamma[i][k]);
                if !lhs.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acb_structure::AcbStructure;
    use crate::lie_algebra::{catalog_algebra, BianchiId, BianchiType};
    use crate::matrix::vec3_zero;

    fn connection_for(ty: BianchiType, subtype: u8) -> (StructureConstants, ConnectionCoefficients)
    {
        let sc = catalog_algebra(&BianchiId::new(ty, subtype).unwrap());
        let g = AcbStructure::canonical().g;
        let gamma = levi_civita(&sc, &g).unwrap();
        (sc, gamma)
    }

    fn vec_i64(v: [i64; 3]) -> Vec3 {
        crate::matrix::vec3_from_i64(v)
    }

    #[test]
    fn heisenberg_connection_table() {
        let (_, gamma) = connection_for(BianchiType::II, 1);
        let half = |v: [i64; 3]| vec3(|m| Scalar::constant(Rational::new(v[m], 2)));
        assert_eq!(gamma.derivative(0, 0), &vec3_zero());
        assert_eq!(gamma.derivative(0, 1), &half([0, 0, -1]));
        assert_eq!(gamma.derivative(1, 0), &half([0, 0, -1]));
        assert_eq!(gamma.derivative(0, 2), &half([0, -1, 0]));
        assert_eq!(gamma.derivative(1, 2), &half([1, 0, 0]));
        assert_eq!(gamma.derivative(2, 0), &half([0, -1, 0]));
        assert_eq!(gamma.derivative(2, 1), &half([-1, 0, 0]));
        assert_eq!(gamma.derivative(1, 1), &vec3_zero());
        assert_eq!(gamma.derivative(2, 2), &vec3_zero());
    }

    #[test]
    fn vi_family_connection_table() {
        let (_, gamma) = connection_for(BianchiType::VIh, 1);
        let h = Scalar::h();
        assert_eq!(gamma.derivative(0, 0), &[Scalar::zero(), Scalar::zero(), h.clone()]);
        assert_eq!(gamma.derivative(0, 2), &[-&h, Scalar::zero(), Scalar::zero()]);
        assert_eq!(gamma.derivative(1, 1), &[Scalar::zero(), Scalar::zero(), -&h]);
        assert_eq!(gamma.derivative(1, 2), &[Scalar::zero(), -&h, Scalar::zero()]);
        assert_eq!(gamma.derivative(2, 0), &vec_i64([0, -1, 0]));
        assert_eq!(gamma.derivative(2, 1), &vec_i64([-1, 0, 0]));
        for (i, j) in [(0, 1), (1, 0), (2, 2)] {
            assert_eq!(gamma.derivative(i, j), &vec3_zero(), "({i},{j})");
        }
    }

    #[test]
    fn koszul_output_passes_independent_check_on_every_row() {
        let g = AcbStructure::canonical().g;
        for row in BianchiId::all_rows() {
            let sc = catalog_algebra(&row);
            let gamma = levi_civita(&sc, &g).unwrap();
            assert!(
                check_connection(&sc, &g, &gamma),
                "{} connection fails its defining properties",
                row.label()
            );
        }
    }

    #[test]
    fn check_rejects_perturbed_connection() {
        let (sc, gamma) = connection_for(BianchiType::II, 1);
        let g = AcbStructure::canonical().g;

        let mut torsion_broken = gamma.gamma.clone();
        torsion_broken[0][1][2] = Scalar::one();
        assert!(!check_connection(
            &sc,
            &g,
            &ConnectionCoefficients::new(torsion_broken)
        ));

        // Shifting both gamma[0][1] and gamma[1][0] by the same amount keeps
        // zero torsion but breaks metric compatibility.
        let mut compat_broken = gamma.gamma.clone();
        compat_broken[0][1][2] = &compat_broken[0][1][2] + &Scalar::one();
        compat_broken[1][0][2] = &compat_broken[1][0][2] + &Scalar::one();
        assert!(!check_connection(
            &sc,
            &g,
            &ConnectionCoefficients::new(compat_broken)
        ));
    }

    #[test]
    fn derive_is_bilinear() {
        let (_, gamma) = connection_for(BianchiType::VIh, 1);
        let v = vec_i64([1, 1, 0]);
        let d = gamma.derive(&v, &v);
        // nabla_{e1+e2}(e1+e2) = nabla_1 e1 + nabla_1 e2 + nabla_2 e1 + nabla_2 e2 = 0.
        assert_eq!(d, vec3_zero());
    }

    #[test]
    fn rendering_lists_nonzero_entries() {
        let (_, gamma) = connection_for(BianchiType::VIh, 1);
        let rows = gamma.nonzero_derivatives();
        assert!(rows.contains(&"nabla_e1 e1 = he3".to_string()));
        assert!(rows.contains(&"nabla_e3 e1 = -e2".to_string()));
        assert_eq!(rows.len(), 6);
    }

    #[test]
    fn abelian_algebra_is_flat_at_the_connection_level() {
        let (_, gamma) = connection_for(BianchiType::I, 1);
        assert_eq!(gamma, ConnectionCoefficients::new(ten3(|_, _, _| Scalar::zero())));
    }
}
