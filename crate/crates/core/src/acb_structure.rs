//! Almost contact B-metric structures on the fixed basis.
//!
//! The structure is a tuple (phi, xi, eta, g): an endomorphism phi, a Reeb
//! vector xi, its dual one-form eta, and a pseudo-Riemannian metric g of
//! signature (2,1) satisfying
//!
//! ```text
//! phi xi = 0,   phi^2 = -Id + xi (x) eta,   eta(xi) = 1,
//! g(phi x, phi y) = -g(x, y) + eta(x) eta(y).
//! ```
//!
//! The last identity makes g a B-metric: phi is an anti-isometry on the
//! kernel of eta, in contrast to the metric-preserving phi of the contact
//! metric world. Everything downstream (the associated metric, Lee forms,
//! the class decomposition) reads these axioms through this module, so the
//! checks here are entry-wise polynomial identities, not numeric tests.

use thiserror::Error;

use crate::matrix::{
    bilinear, det3, mat3, mat3_from_i64, mat3_identity, mat_is_symmetric, mat_mul, mat_vec,
    signature, vec3, vec3_from_i64, vec_is_zero, Mat3, Vec3, DIM,
};
use crate::scalar::{ExactRoot, Scalar};

/// Errors from metric inversion.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum StructureError {
    #[error("metric is singular: det g vanishes identically")]
    SingularMetric,
    /// Inverting a metric whose determinant depends on h would leave the
    /// exact polynomial arithmetic; the determinant's roots (where the
    /// metric degenerates) are reported when they are expressible.
    #[error("metric inverse is not polynomial in h: det g = {det}")]
    NonConstantDeterminant {
        det: Scalar,
        singular_at: Vec<ExactRoot>,
    },
}

/// An almost contact B-metric structure. `phi` acts by columns:
/// `phi[i][j]` is the `e_{i+1}` component of `phi(e_{j+1})`; `eta` is a
/// covector paired by `eta(v) = sum_i eta[i] v[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcbStructure {
    pub phi: Mat3,
    pub xi: Vec3,
    pub eta: Vec3,
    pub g: Mat3,
}

impl AcbStructure {
    /// The structure used for every catalog entry:
    /// `phi e1 = e2, phi e2 = -e1, phi e3 = 0, xi = e3, eta = e3^*`,
    /// `g = diag(1, -1, 1)`.
    pub fn canonical() -> Self {
        AcbStructure {
            phi: mat3_from_i64([[0, -1, 0], [1, 0, 0], [0, 0, 0]]),
            xi: vec3_from_i64([0, 0, 1]),
            eta: vec3_from_i64([0, 0, 1]),
            g: mat3_from_i64([[1, 0, 0], [0, -1, 0], [0, 0, 1]]),
        }
    }

    /// Every axiom violation, one message per failed identity. Empty means
    /// the tuple is a genuine almost contact B-metric structure.
    pub fn compatibility_failures(&self) -> Vec<String> {
        let mut failures = Vec::new();

        if !vec_is_zero(&mat_vec(&self.phi, &self.xi)) {
            failures.push("phi(xi) != 0".to_string());
        }

        let eta_xi: Scalar = (0..DIM).map(|i| &self.eta[i] * &self.xi[i]).sum();
        if eta_xi != Scalar::one() {
            failures.push(format!("eta(xi) = {eta_xi}, expected 1"));
        }

        let eta_phi = vec3(|j| (0..DIM).map(|i| &self.eta[i] * &self.phi[i][j]).sum());
        if !vec_is_zero(&eta_phi) {
            failures.push("eta(phi(x)) != 0".to_string());
        }

        let phi_sq = mat_mul(&self.phi, &self.phi);
        let expected = mat3(|i, j| {
            let id = &mat3_identity()[i][j];
            &(&self.xi[i] * &self.eta[j]) - id
        });
        if phi_sq != expected {
            failures.push("phi^2 != -Id + xi (x) eta".to_string());
        }

        if !mat_is_symmetric(&self.g) {
            failures.push("g is not symmetric".to_string());
        }

        // g(phi e_i, phi e_j) + g(e_i, e_j) - eta(e_i) eta(e_j) = 0.
        for i in 0..DIM {
            for j in 0..DIM {
                let phi_i = mat_vec(&self.phi, &crate::matrix::basis(i));
                let phi_j = mat_vec(&self.phi, &crate::matrix::basis(j));
                let lhs = &(&bilinear(&self.g, &phi_i, &phi_j) + &self.g[i][j])
                    - &(&self.eta[i] * &self.eta[j]);
                if !lhs.is_zero() {
                    failures.push(format!(
                        "g(phi e{}, phi e{}) != -g(e{}, e{}) + eta(e{}) eta(e{})",
                        i + 1,
                        j + 1,
                        i + 1,
                        j + 1,
                        i + 1,
                        j + 1
                    ));
                }
            }
        }

        // eta must be the g-dual of xi; this follows from the axioms above
        // but is cheap to confirm directly.
        let g_xi = mat_vec(&self.g, &self.xi);
        if g_xi != self.eta {
            failures.push("eta != g(., xi)".to_string());
        }

        if det3(&self.g).is_zero() {
            failures.push("g is degenerate".to_string());
        } else if let Some(sig) = signature(&self.g) {
            if sig != (2, 1, 0) {
                failures.push(format!(
                    "g has signature ({}, {}, {}), expected (2, 1, 0)",
                    sig.0, sig.1, sig.2
                ));
            }
        }

        failures
    }

    pub fn check_compatibility(&self) -> bool {
        self.compatibility_failures().is_empty()
    }

    /// The associated metric `g~(x, y) = g(x, phi y) + eta(x) eta(y)`, also
    /// a B-metric of signature (2,1) for the same structure.
    pub fn associated_metric(&self) -> Mat3 {
        mat3(|i, j| {
            let g_phi: Scalar = (0..DIM).map(|m| &self.g[i][m] * &self.phi[m][j]).sum();
            &g_phi + &(&self.eta[i] * &self.eta[j])
        })
    }
}

/// Exact inverse of a metric. Only matrices with constant nonzero
/// determinant stay inside polynomial arithmetic; the catalog metrics all
/// do.
pub fn metric_inverse(g: &Mat3) -> Result<Mat3, StructureError> {
    let det = det3(g);
    if det.is_zero() {
        return Err(StructureError::SingularMetric);
    }
    let Some(d) = det.as_constant() else {
        let singular_at = det.exact_roots().unwrap_or_default();
        return Err(StructureError::NonConstantDeterminant { det, singular_at });
    };
    let adj = crate::matrix::adjugate3(g);
    let inv_d = d.recip().expect("determinant is nonzero");
    Ok(mat3(|i, j| adj[i][j].scale(&inv_d)))
}
