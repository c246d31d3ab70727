//! Curvature tensor, Ricci quantities, sectional curvatures, and the
//! geometric conditions decided exactly in the family parameter.
//!
//! The curvature convention is `R(x,y)z = nabla_x nabla_y z - nabla_y
//! nabla_x z - nabla_{[x,y]} z` with covariant form `R(x,y,z,w) =
//! g(R(x,y)z, w)`; on a Lie group with left-invariant metric everything
//! reduces to polynomial algebra in the connection coefficients and
//! structure constants. Ricci is the contraction `rho(y,z) =
//! g^{ij} R(e_i,y,z,e_j)` and its associated variant replaces the last slot
//! by `phi e_j`.
//!
//! Conditions such as flatness are statements about a finite list of
//! polynomial quantities vanishing, so each verdict is one of: holds
//! identically, holds exactly at listed values of h, never holds, or could
//! not be resolved in the supported root forms.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::acb_structure::AcbStructure;
use crate::connection::ConnectionCoefficients;
use crate::lie_algebra::StructureConstants;
use crate::matrix::{
    basis, bilinear, det_of_columns, mat3, mat_vec, ten4, vec3_zero, vec_add, vec_scale, vec_sub,
    Mat3, Ten4, Vec3, DIM,
};
use crate::scalar::{ExactRoot, HDomain, Rational, Scalar};

/// Errors from sectional-curvature evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CurvatureError {
    /// The plane's induced metric is degenerate, so sectional curvature is
    /// undefined there.
    #[error("section is degenerate: g(x,x) g(y,y) - g(x,y)^2 = 0")]
    DegenerateSection,
    /// The two vectors span a line (or a point), not a plane.
    #[error("vectors do not span a plane")]
    NotAPlane,
    /// Numerator is not divisible by the denominator, so the curvature is
    /// a genuine rational function of h rather than a polynomial.
    #[error("sectional curvature ({numerator})/({denominator}) is not polynomial in h")]
    NonPolynomialSectional {
        numerator: Scalar,
        denominator: Scalar,
    },
}

/// Covariant curvature components `r[i][j][k][l] = R(e_i,e_j,e_k,e_l)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureTensor {
    r: Ten4,
}

impl CurvatureTensor {
    pub fn component(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        &self.r[i][j][k][l]
    }

    pub fn components(&self) -> &Ten4 {
        &self.r
    }

    pub fn is_zero(&self) -> bool {
        self.r.iter().flatten().flatten().flatten().all(Scalar::is_zero)
    }

    /// `R(x,y,z,w)` for coordinate vectors, by multilinearity.
    pub fn evaluate(&self, x: &Vec3, y: &Vec3, z: &Vec3, w: &Vec3) -> Scalar {
        let mut acc = Scalar::zero();
        for i in 0..DIM {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                if y[j].is_zero() {
                    continue;
                }
                for k in 0..DIM {
                    if z[k].is_zero() {
                        continue;
                    }
                    for l in 0..DIM {
                        let factor = &(&x[i] * &y[j]) * &(&z[k] * &w[l]);
                        acc = &acc + &(&factor * &self.r[i][j][k][l]);
                    }
                }
            }
        }
        acc
    }

    /// Antisymmetry in both pairs, pair interchange, and the first Bianchi
    /// identity, as polynomial identities.
    pub fn check_symmetries(&self) -> bool {
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    for l in 0..DIM {
                        let r = &self.r[i][j][k][l];
                        if *r != -&self.r[j][i][k][l]
                            || *r != -&self.r[i][j][l][k]
                            || *r != self.r[k][l][i][j]
                        {
                            return false;
                        }
                        let bianchi =
                            &(r + &self.r[j][k][i][l]) + &self.r[k][i][j][l];
                        if !bianchi.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Nonzero components with `i < j`, `k < l`, `(i,j) <= (k,l)`, rendered
    /// as `R_1212 = -h^2`; the rest follow from the symmetries.
    pub fn nonzero_components(&self) -> Vec<String> {
        let mut out = Vec::new();
        for i in 0..DIM {
            for j in (i + 1)..DIM {
                for k in 0..DIM {
                    for l in (k + 1)..DIM {
                        if (k, l) < (i, j) {
                            continue;
                        }
                        if !self.r[i][j][k][l].is_zero() {
                            out.push(format!(
                                "R_{}{}{}{} = {}",
                                i + 1,
                                j + 1,
                                k + 1,
                                l + 1,
                                self.r[i][j][k][l]
                            ));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Curvature of the connection on the algebra, in covariant form.
pub fn curvature(
    gamma: &ConnectionCoefficients,
    sc: &StructureConstants,
    g: &Mat3,
) -> CurvatureTensor {
    // R(e_i,e_j)e_k as a vector, before lowering the last index.
    let rvec = |i: usize, j: usize, k: usize| -> Vec3 {
        let mut v = vec3_zero();
        for m in 0..DIM {
            v = vec_add(&v, &vec_scale(gamma.coefficient(j, k, m), gamma.derivative(i, m)));
            v = vec_sub(&v, &vec_scale(gamma.coefficient(i, k, m), gamma.derivative(j, m)));
            v = vec_sub(&v, &vec_scale(sc.c(i, j, m), gamma.derivative(m, k)));
        }
        v
    };
    let r = ten4(|i, j, k, l| bilinear(g, &rvec(i, j, k), &basis(l)));
    CurvatureTensor { r }
}

/// Ricci tensor `rho_ab = g^{ij} R(e_i, e_a, e_b, e_j)`.
pub fn ricci(r: &CurvatureTensor, g_inv: &Mat3) -> Mat3 {
    mat3(|a, b| {
        let mut acc = Scalar::zero();
        for i in 0..DIM {
            for j in 0..DIM {
                acc = &acc + &(&g_inv[i][j] * &r.r[i][a][b][j]);
            }
        }
        acc
    })
}

/// Associated Ricci tensor `rho*_ab = g^{ij} R(e_i, e_a, e_b, phi e_j)`.
pub fn star_ricci(r: &CurvatureTensor, g_inv: &Mat3, phi: &Mat3) -> Mat3 {
    mat3(|a, b| {
        let mut acc = Scalar::zero();
        for i in 0..DIM {
            for j in 0..DIM {
                for m in 0..DIM {
                    acc = &acc + &(&(&g_inv[i][j] * &phi[m][j]) * &r.r[i][a][b][m]);
                }
            }
        }
        acc
    })
}

/// Trace of a symmetric 2-tensor against the inverse metric.
pub fn metric_trace(t: &Mat3, g_inv: &Mat3) -> Scalar {
    let mut acc = Scalar::zero();
    for a in 0..DIM {
        for b in 0..DIM {
            acc = &acc + &(&g_inv[a][b] * &t[a][b]);
        }
    }
    acc
}

/// Scalar curvature by double contraction of R, bypassing the Ricci
/// tensor; agrees with `metric_trace(ricci(..), ..)` and serves as its
/// cross-check.
pub fn tau_direct(r: &CurvatureTensor, g_inv: &Mat3) -> Scalar {
    let mut acc = Scalar::zero();
    for i in 0..DIM {
        for j in 0..DIM {
            for a in 0..DIM {
                for b in 0..DIM {
                    let w = &g_inv[i][j] * &g_inv[a][b];
                    acc = &acc + &(&w * &r.r[i][a][b][j]);
                }
            }
        }
    }
    acc
}

/// Sectional curvature `R(x,y,y,x) / (g(x,x) g(y,y) - g(x,y)^2)` of the
/// plane spanned by `x` and `y`.
pub fn sectional(
    r: &CurvatureTensor,
    g: &Mat3,
    x: &Vec3,
    y: &Vec3,
) -> Result<Scalar, CurvatureError> {
    if !spans_plane(x, y) {
        return Err(CurvatureError::NotAPlane);
    }
    let gxx = bilinear(g, x, x);
    let gyy = bilinear(g, y, y);
    let gxy = bilinear(g, x, y);
    let den = &(&gxx * &gyy) - &(&gxy * &gxy);
    if den.is_zero() {
        return Err(CurvatureError::DegenerateSection);
    }
    let num = r.evaluate(x, y, y, x);
    num.div_exact(&den)
        .ok_or(CurvatureError::NonPolynomialSectional {
            numerator: num,
            denominator: den,
        })
}

fn spans_plane(x: &Vec3, y: &Vec3) -> bool {
    for i in 0..DIM {
        for j in (i + 1)..DIM {
            let minor = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
            if !minor.is_zero() {
                return true;
            }
        }
    }
    false
}

/// How a 2-plane sits relative to the structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SectionKind {
    /// Orthogonal to its phi-image.
    TotallyReal,
    /// Coincides with its phi-image.
    PhiHolomorphic,
    /// Contains the Reeb vector xi.
    XiSection,
    /// None of the special kinds.
    Generic,
}

impl fmt::Display for SectionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            SectionKind::TotallyReal => "totally real",
            SectionKind::PhiHolomorphic => "phi-holomorphic",
            SectionKind::XiSection => "xi-section",
            SectionKind::Generic => "generic",
        };
        write!(f, "{tag}")
    }
}

/// Kinds of the plane spanned by `x` and `y`. The kinds are not exclusive
/// (a xi-section can be totally real); `Generic` appears alone.
pub fn section_kinds(
    s: &AcbStructure,
    x: &Vec3,
    y: &Vec3,
) -> Result<BTreeSet<SectionKind>, CurvatureError> {
    if !spans_plane(x, y) {
        return Err(CurvatureError::NotAPlane);
    }
    let mut kinds = BTreeSet::new();

    let xi_in_span = det_of_columns(x, y, &s.xi).is_zero();
    if xi_in_span {
        kinds.insert(SectionKind::XiSection);
    }

    let phi_x = mat_vec(&s.phi, x);
    let phi_y = mat_vec(&s.phi, y);

    // phi maps the plane into itself and is injective on it exactly when
    // xi is outside the plane.
    if !xi_in_span
        && det_of_columns(x, y, &phi_x).is_zero()
        && det_of_columns(x, y, &phi_y).is_zero()
    {
        kinds.insert(SectionKind::PhiHolomorphic);
    }

    let orthogonal = [
        bilinear(&s.g, &phi_x, x),
        bilinear(&s.g, &phi_x, y),
        bilinear(&s.g, &phi_y, x),
        bilinear(&s.g, &phi_y, y),
    ];
    if orthogonal.iter().all(Scalar::is_zero) {
        kinds.insert(SectionKind::TotallyReal);
    }

    if kinds.is_empty() {
        kinds.insert(SectionKind::Generic);
    }
    Ok(kinds)
}

/// Where a condition holds as h ranges over the admissible domain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum ConditionVerdict {
    /// Holds for every h in the domain.
    Identically,
    /// Holds exactly at the listed values.
    IffHIn { values: Vec<ExactRoot> },
    /// Holds for no h in the domain.
    Never,
    /// The deciding polynomials have roots outside the supported exact
    /// forms.
    Unresolved { reason: String },
}

impl ConditionVerdict {
    /// Truth of the condition at a concrete rational h, when decided.
    pub fn at_rational(&self, h: &Rational) -> Option<bool> {
        match self {
            ConditionVerdict::Identically => Some(true),
            ConditionVerdict::Never => Some(false),
            ConditionVerdict::IffHIn { values } => Some(
                values
                    .iter()
                    .any(|r| r.as_rational().map(|q| q == h).unwrap_or(false)),
            ),
            ConditionVerdict::Unresolved { .. } => None,
        }
    }
}

impl fmt::Display for ConditionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConditionVerdict::Identically => write!(f, "holds identically"),
            ConditionVerdict::Never => write!(f, "never holds"),
            ConditionVerdict::IffHIn { values } => {
                if values.len() == 1 {
                    write!(f, "holds iff h = {}", values[0])
                } else {
                    let list = values
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(", ");
                    write!(f, "holds iff h in {{{list}}}")
                }
            }
            ConditionVerdict::Unresolved { reason } => write!(f, "unresolved: {reason}"),
        }
    }
}

/// Verdict for the condition "every quantity in the list vanishes", over
/// the given domain.
pub fn vanishing_verdict(quantities: &[&Scalar], domain: HDomain) -> ConditionVerdict {
    let nonzero: Vec<&Scalar> = quantities
        .iter()
        .copied()
        .filter(|q| !q.is_zero())
        .collect();
    if nonzero.is_empty() {
        return ConditionVerdict::Identically;
    }
    // A nonzero constant in the list rules everything out.
    if nonzero.iter().any(|q| q.is_constant()) {
        return ConditionVerdict::Never;
    }
    // Common roots are roots of any one quantity; take the first whose
    // roots are expressible and filter by the rest.
    let mut candidates = None;
    let mut last_error = String::new();
    for q in &nonzero {
        match q.exact_roots() {
            Ok(roots) => {
                candidates = Some(roots);
                break;
            }
            Err(e) => last_error = e.to_string(),
        }
    }
    let Some(candidates) = candidates else {
        return ConditionVerdict::Unresolved { reason: last_error };
    };
    let mut common: Vec<ExactRoot> = candidates
        .into_iter()
        .filter(|r| domain.contains_root(r))
        .filter(|r| nonzero.iter().all(|q| q.vanishes_at(r)))
        .collect();
    if common.is_empty() {
        ConditionVerdict::Never
    } else {
        common.sort();
        ConditionVerdict::IffHIn { values: common }
    }
}

/// Result of the eta-complex-Einstein analysis: whether
/// `rho = lambda g + mu g~ + nu eta (x) eta` can hold, and the unique
/// candidate triple `(lambda, mu, nu)` when the structure determines one.
#[derive(Debug, Clone, PartialEq)]
pub struct EtaComplexEinstein {
    pub verdict: ConditionVerdict,
    pub solution: Option<[Scalar; 3]>,
}

/// Solves `rho = lambda g + mu g~ + nu eta (x) eta` exactly. The three
/// coefficient tensors must have constant entries (true for the canonical
/// structure); the six independent component equations are reduced by
/// rational elimination, pivot rows determine the candidate triple, and
/// rows eliminated to zero leave polynomial residuals whose vanishing is
/// the verdict.
pub fn eta_complex_einstein(
    rho: &Mat3,
    s: &AcbStructure,
    domain: HDomain,
) -> EtaComplexEinstein {
    let gt = s.associated_metric();
    let mut rows: Vec<([Rational; 3], Scalar)> = Vec::new();
    for a in 0..DIM {
        for b in a..DIM {
            let coeffs = [
                s.g[a][b].as_constant(),
                gt[a][b].as_constant(),
                (&s.eta[a] * &s.eta[b]).as_constant(),
            ];
            if coeffs.iter().any(Option::is_none) {
                return EtaComplexEinstein {
                    verdict: ConditionVerdict::Unresolved {
                        reason: "structure coefficient tensors are not constant".to_string(),
                    },
                    solution: None,
                };
            }
            let coeffs = coeffs.map(Option::unwrap);
            rows.push((coeffs, rho[a][b].clone()));
        }
    }

    // Gauss-Jordan over the rationals, carrying the polynomial right side.
    let mut pivot_row_of_col = [None::<usize>; 3];
    let mut next_row = 0;
    for col in 0..3 {
        let Some(p) = (next_row..rows.len()).find(|&r| !rows[r].0[col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, p);
        let inv = rows[next_row].0[col].recip().expect("nonzero pivot");
        for c in 0..3 {
            rows[next_row].0[c] = &rows[next_row].0[c] * &inv;
        }
        rows[next_row].1 = rows[next_row].1.scale(&inv);
        for r in 0..rows.len() {
            if r == next_row || rows[r].0[col].is_zero() {
                continue;
            }
            let factor = rows[r].0[col].clone();
            for c in 0..3 {
                let delta = &rows[next_row].0[c] * &factor;
                rows[r].0[c] = &rows[r].0[c] - &delta;
            }
            let delta = rows[next_row].1.scale(&factor);
            rows[r].1 = &rows[r].1 - &delta;
        }
        pivot_row_of_col[col] = Some(next_row);
        next_row += 1;
    }

    let residuals: Vec<&Scalar> = rows[next_row..].iter().map(|(_, rhs)| rhs).collect();
    let verdict = vanishing_verdict(&residuals, domain);
    let solution = if pivot_row_of_col.iter().all(Option::is_some) {
        Some([
            rows[pivot_row_of_col[0].unwrap()].1.clone(),
            rows[pivot_row_of_col[1].unwrap()].1.clone(),
            rows[pivot_row_of_col[2].unwrap()].1.clone(),
        ])
    } else {
        None
    };
    EtaComplexEinstein { verdict, solution }
}

/// Proportionality of `rho*` and `g~` on the horizontal distribution
/// `H = ker(eta)`, with the factor when the relation holds identically.
#[derive(Debug, Clone, PartialEq)]
pub struct HorizontalProportionality {
    pub verdict: ConditionVerdict,
    pub factor: Option<Scalar>,
}

/// The curvature quantities of one manifold, with the condition verdicts
/// derived from them.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureReport {
    pub tensor: CurvatureTensor,
    pub ricci: Mat3,
    pub star_ricci: Mat3,
    pub tau: Scalar,
    pub tau_star: Scalar,
    pub nabla_phi_norm: Scalar,
    /// Sectional curvatures of the basis planes: `k_12, k_13, k_23`.
    pub k: [Scalar; 3],
}

impl CurvatureReport {
    /// Computes every quantity for the connection on the algebra. The
    /// scalar curvature is computed both through the Ricci tensor and by
    /// direct double contraction; the two must agree exactly.
    pub fn compute(
        gamma: &ConnectionCoefficients,
        sc: &StructureConstants,
        s: &AcbStructure,
        g_inv: &Mat3,
    ) -> Result<Self, CurvatureError> {
        let tensor = curvature(gamma, sc, &s.g);
        let rho = ricci(&tensor, g_inv);
        let rho_star = star_ricci(&tensor, g_inv, &s.phi);
        let tau = metric_trace(&rho, g_inv);
        assert_eq!(tau, tau_direct(&tensor, g_inv), "scalar curvature paths differ");
        let tau_star = metric_trace(&rho_star, g_inv);
        let nabla_phi_norm = crate::f_tensor::square_norm_nabla_phi(gamma, s, g_inv);
        let k = [
            sectional(&tensor, &s.g, &basis(0), &basis(1))?,
            sectional(&tensor, &s.g, &basis(0), &basis(2))?,
            sectional(&tensor, &s.g, &basis(1), &basis(2))?,
        ];
        Ok(CurvatureReport {
            tensor,
            ricci: rho,
            star_ricci: rho_star,
            tau,
            tau_star,
            nabla_phi_norm,
            k,
        })
    }

    /// `R = 0`.
    pub fn flat(&self, domain: HDomain) -> ConditionVerdict {
        let quantities: Vec<&Scalar> = self
            .tensor
            .r
            .iter()
            .flatten()
            .flatten()
            .flatten()
            .collect();
        vanishing_verdict(&quantities, domain)
    }

    /// `tau = 0`.
    pub fn scalar_flat(&self, domain: HDomain) -> ConditionVerdict {
        vanishing_verdict(&[&self.tau], domain)
    }

    /// `tau* = 0`.
    pub fn star_scalar_flat(&self, domain: HDomain) -> ConditionVerdict {
        vanishing_verdict(&[&self.tau_star], domain)
    }

    /// Vanishing square norm of `nabla phi`; possible with nonzero
    /// `nabla phi` because g is indefinite.
    pub fn isotropic_cosymplectic(&self, domain: HDomain) -> ConditionVerdict {
        vanishing_verdict(&[&self.nabla_phi_norm], domain)
    }

    /// `rho = (tau/3) g`; in dimension three the trace fixes the factor.
    pub fn einstein(&self, g: &Mat3, domain: HDomain) -> ConditionVerdict {
        let third = Rational::new(1, 3);
        let factor = self.tau.scale(&third);
        let residual = mat3(|a, b| &self.ricci[a][b] - &(&factor * &g[a][b]));
        let quantities: Vec<&Scalar> = residual.iter().flatten().collect();
        vanishing_verdict(&quantities, domain)
    }

    /// `rho = lambda g + mu g~ + nu eta (x) eta`.
    pub fn eta_complex_einstein(&self, s: &AcbStructure, domain: HDomain) -> EtaComplexEinstein {
        eta_complex_einstein(&self.ricci, s, domain)
    }

    /// `R` restricted to `H = ker(eta)` vanishes; in dimension three this
    /// is the single component `R(e_1,e_2,e_1,e_2)`.
    pub fn horizontal_flat(&self, domain: HDomain) -> ConditionVerdict {
        let mut quantities = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        quantities.push(&self.tensor.r[i][j][k][l]);
                    }
                }
            }
        }
        vanishing_verdict(&quantities, domain)
    }

    /// `rho*` restricted to `H = ker(eta)` vanishes.
    pub fn horizontal_star_ricci_flat(&self, domain: HDomain) -> ConditionVerdict {
        let quantities = [
            &self.star_ricci[0][0],
            &self.star_ricci[0][1],
            &self.star_ricci[1][0],
            &self.star_ricci[1][1],
        ];
        vanishing_verdict(&quantities, domain)
    }

    /// `rho*|_H = c g~|_H` for a single polynomial factor c. The verdict is
    /// the vanishing of all cross-determinants; the factor is extracted by
    /// exact division when the relation holds identically.
    pub fn horizontal_proportionality(
        &self,
        s: &AcbStructure,
        domain: HDomain,
    ) -> HorizontalProportionality {
        let gt = s.associated_metric();
        let slots = [(0, 0), (0, 1), (1, 0), (1, 1)];
        let mut crosses = Vec::new();
        for &(a, b) in &slots {
            for &(c, d) in &slots {
                let cross = &(&self.star_ricci[a][b] * &gt[c][d])
                    - &(&self.star_ricci[c][d] * &gt[a][b]);
                crosses.push(cross);
            }
        }
        let refs: Vec<&Scalar> = crosses.iter().collect();
        let verdict = vanishing_verdict(&refs, domain);
        let factor = if verdict == ConditionVerdict::Identically {
            slots
                .iter()
                .find(|&&(a, b)| !gt[a][b].is_zero())
                .and_then(|&(a, b)| self.star_ricci[a][b].div_exact(&gt[a][b]))
                .or_else(|| {
                    // g~ vanishes on H only if rho* does too; factor 0 then.
                    if slots.iter().all(|&(a, b)| self.star_ricci[a][b].is_zero()) {
                        Some(Scalar::zero())
                    } else {
                        None
                    }
                })
        } else {
            None
        };
        HorizontalProportionality { verdict, factor }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acb_structure::metric_inverse;
    use crate::connection::levi_civita;
    use crate::lie_algebra::{catalog_algebra, BianchiId, BianchiType};
    use crate::matrix::vec3_from_i64;

    fn report(ty: BianchiType, subtype: u8) -> (AcbStructure, CurvatureReport) {
        let sc = catalog_algebra(&BianchiId::new(ty, subtype).unwrap());
        let s = AcbStructure::canonical();
        let g_inv = metric_inverse(&s.g).unwrap();
        let gamma = levi_civita(&sc, &s.g).unwrap();
        let rep = CurvatureReport::compute(&gamma, &sc, &s, &g_inv).unwrap();
        (s, rep)
    }

    fn poly(coeffs: &[i64]) -> Scalar {
        Scalar::from_coeffs_i64(coeffs)
    }

    #[test]
    fn vi_subtype_one_block() {
        let (_, rep) = report(BianchiType::VIh, 1);
        let mh2 = poly(&[0, 0, -1]);
        assert_eq!(rep.tensor.component(0, 1, 0, 1), &mh2);
        assert_eq!(rep.tensor.component(0, 2, 0, 2), &poly(&[0, 0, 1]));
        assert_eq!(rep.tensor.component(1, 2, 1, 2), &mh2);
        assert!(rep.tensor.component(0, 1, 1, 2).is_zero());

        let want_rho = [
            [poly(&[0, 0, -2]), Scalar::zero(), Scalar::zero()],
            [Scalar::zero(), poly(&[0, 0, 2]), Scalar::zero()],
            [Scalar::zero(), Scalar::zero(), poly(&[0, 0, -2])],
        ];
        assert_eq!(rep.ricci, want_rho);

        assert_eq!(rep.star_ricci[0][1], mh2);
        assert_eq!(rep.star_ricci[1][0], mh2);
        assert!(rep.star_ricci[0][0].is_zero());
        assert!(rep.star_ricci[2][2].is_zero());

        assert_eq!(rep.tau, poly(&[0, 0, -6]));
        assert!(rep.tau_star.is_zero());
        assert_eq!(rep.nabla_phi_norm, poly(&[8, 0, -4]));
        assert_eq!(rep.k, [mh2.clone(), mh2.clone(), mh2]);
    }

    #[test]
    fn vi_subtype_three_block() {
        let (_, rep) = report(BianchiType::VIh, 3);
        assert_eq!(rep.tensor.component(0, 1, 0, 1), &poly(&[1, 0, 1]));
        assert_eq!(rep.tensor.component(0, 2, 0, 2), &poly(&[1, 0, -1]));
        assert_eq!(rep.tensor.component(1, 2, 1, 2), &poly(&[1, 0, 1]));
        assert_eq!(rep.tensor.component(0, 1, 1, 2), &poly(&[0, 2]));

        assert_eq!(rep.ricci[0][0], poly(&[0, 0, 2]));
        assert_eq!(rep.ricci[0][2], poly(&[0, -2]));
        assert_eq!(rep.ricci[1][1], poly(&[-2, 0, -2]));
        assert_eq!(rep.ricci[2][2], poly(&[0, 0, 2]));

        assert_eq!(rep.star_ricci[0][1], poly(&[1, 0, 1]));
        assert_eq!(rep.star_ricci[1][2], poly(&[0, -2]));

        assert_eq!(rep.tau, poly(&[2, 0, 6]));
        assert!(rep.tau_star.is_zero());
        assert_eq!(rep.nabla_phi_norm, poly(&[10, 0, 10]));
        assert_eq!(rep.k, [poly(&[1, 0, 1]), poly(&[-1, 0, 1]), poly(&[1, 0, 1])]);
    }

    #[test]
    fn vii_subtype_one_block() {
        let (_, rep) = report(BianchiType::VIIh, 1);
        assert_eq!(rep.tensor.component(0, 1, 0, 1), &poly(&[-1, 0, -1]));
        assert_eq!(rep.tensor.component(0, 2, 0, 2), &poly(&[-1, 0, 1]));
        assert_eq!(rep.tensor.component(1, 2, 1, 2), &poly(&[1, 0, -1]));
        assert_eq!(rep.tensor.component(0, 2, 1, 2), &poly(&[0, -2]));

        assert_eq!(rep.ricci[0][0], poly(&[0, 0, -2]));
        assert_eq!(rep.ricci[0][1], poly(&[0, 2]));
        assert_eq!(rep.ricci[1][1], poly(&[0, 0, 2]));
        assert_eq!(rep.ricci[2][2], poly(&[2, 0, -2]));
        assert!(rep.ricci[0][2].is_zero());

        assert_eq!(rep.star_ricci[0][1], poly(&[-1, 0, -1]));
        assert_eq!(rep.star_ricci[2][2], poly(&[0, 4]));

        assert_eq!(rep.tau, poly(&[2, 0, -6]));
        assert_eq!(rep.tau_star, poly(&[0, 4]));
        assert_eq!(rep.nabla_phi_norm, poly(&[4, 0, -4]));
        assert_eq!(
            rep.k,
            [poly(&[-1, 0, -1]), poly(&[1, 0, -1]), poly(&[1, 0, -1])]
        );
    }

    #[test]
    fn vii_subtype_two_block() {
        let (_, rep) = report(BianchiType::VIIh, 2);
        assert_eq!(rep.tensor.component(0, 1, 0, 1), &poly(&[1, 0, -1]));
        assert_eq!(rep.tensor.component(0, 2, 0, 2), &poly(&[-1, 0, 1]));
        assert_eq!(rep.tensor.component(1, 2, 1, 2), &poly(&[-1, 0, -1]));
        assert_eq!(rep.tensor.component(0, 1, 0, 2), &poly(&[0, 2]));

        assert_eq!(rep.ricci[0][0], poly(&[2, 0, -2]));
        assert_eq!(rep.ricci[1][1], poly(&[0, 0, 2]));
        assert_eq!(rep.ricci[1][2], poly(&[0, -2]));
        assert_eq!(rep.ricci[2][2], poly(&[0, 0, -2]));

        assert_eq!(rep.star_ricci[0][1], poly(&[1, 0, -1]));
        assert_eq!(rep.star_ricci[0][2], poly(&[0, 2]));

        assert_eq!(rep.tau, poly(&[2, 0, -6]));
        assert!(rep.tau_star.is_zero());
        assert_eq!(rep.nabla_phi_norm, poly(&[10, 0, -10]));
        assert_eq!(
            rep.k,
            [poly(&[1, 0, -1]), poly(&[1, 0, -1]), poly(&[-1, 0, -1])]
        );
    }

    #[test]
    fn vii_subtype_three_block() {
        let (_, rep) = report(BianchiType::VIIh, 3);
        let h2 = poly(&[0, 0, 1]);
        assert_eq!(rep.tensor.component(0, 1, 0, 1), &h2);
        assert_eq!(rep.tensor.component(0, 2, 0, 2), &poly(&[0, 0, -1]));
        assert_eq!(rep.tensor.component(1, 2, 1, 2), &h2);
        assert_eq!(rep.tau, poly(&[0, 0, 6]));
        assert_eq!(rep.nabla_phi_norm, poly(&[2, 0, 10]));
        assert_eq!(rep.k, [h2.clone(), h2.clone(), h2]);
    }

    #[test]
    fn symmetries_hold_on_every_row() {
        let g = AcbStructure::canonical().g;
        let g_inv = metric_inverse(&g).unwrap();
        for row in BianchiId::all_rows() {
            let sc = catalog_algebra(&row);
            let gamma = levi_civita(&sc, &g).unwrap();
            let r = curvature(&gamma, &sc, &g);
            assert!(r.check_symmetries(), "{}", row.label());
            let rho = ricci(&r, &g_inv);
            assert_eq!(
                metric_trace(&rho, &g_inv),
                tau_direct(&r, &g_inv),
                "{}",
                row.label()
            );
        }
    }

    #[test]
    fn abelian_row_is_flat() {
        let (_, rep) = report(BianchiType::I, 1);
        assert!(rep.tensor.is_zero());
        assert_eq!(rep.flat(HDomain::All), ConditionVerdict::Identically);
    }

    #[test]
    fn sectional_errors() {
        let (s, rep) = report(BianchiType::VIh, 1);
        let null = vec3_from_i64([1, 1, 0]);
        assert_eq!(
            sectional(&rep.tensor, &s.g, &basis(2), &null),
            Err(CurvatureError::DegenerateSection)
        );
        let x = vec3_from_i64([1, 2, 0]);
        let x2 = vec3_from_i64([2, 4, 0]);
        assert_eq!(
            sectional(&rep.tensor, &s.g, &x, &x2),
            Err(CurvatureError::NotAPlane)
        );
    }

    #[test]
    fn section_kind_table() {
        use SectionKind::*;
        let s = AcbStructure::canonical();
        let kinds = |x: [i64; 3], y: [i64; 3]| {
            section_kinds(&s, &vec3_from_i64(x), &vec3_from_i64(y)).unwrap()
        };
        let set = |list: &[SectionKind]| list.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(kinds([1, 0, 0], [0, 1, 0]), set(&[PhiHolomorphic]));
        assert_eq!(kinds([1, 0, 0], [0, 0, 1]), set(&[TotallyReal, XiSection]));
        assert_eq!(kinds([0, 1, 0], [0, 0, 1]), set(&[TotallyReal, XiSection]));
        assert_eq!(kinds([1, 0, 1], [0, 1, 0]), set(&[Generic]));
    }

    #[test]
    fn verdicts_for_vi_subtype_one() {
        let (s, rep) = report(BianchiType::VIh, 1);
        let domain = HDomain::NonPositive;
        assert_eq!(
            rep.flat(domain),
            ConditionVerdict::IffHIn {
                values: vec![ExactRoot::from_int(0)]
            }
        );
        let sqrt2 = ExactRoot::surd(Rational::from_int(2), crate::scalar::Sign::Minus).unwrap();
        assert_eq!(
            rep.isotropic_cosymplectic(domain),
            ConditionVerdict::IffHIn {
                values: vec![sqrt2]
            }
        );
        assert_eq!(rep.star_scalar_flat(domain), ConditionVerdict::Identically);
        assert_eq!(rep.einstein(&s.g, domain), ConditionVerdict::Identically);

        let ece = rep.eta_complex_einstein(&s, domain);
        assert_eq!(ece.verdict, ConditionVerdict::Identically);
        assert_eq!(
            ece.solution,
            Some([poly(&[0, 0, -2]), Scalar::zero(), Scalar::zero()])
        );
    }

    #[test]
    fn verdicts_for_vii_subtype_one() {
        let (s, rep) = report(BianchiType::VIIh, 1);
        let domain = HDomain::NonNegative;
        assert_eq!(rep.flat(domain), ConditionVerdict::Never);
        assert_eq!(
            rep.isotropic_cosymplectic(domain),
            ConditionVerdict::IffHIn {
                values: vec![ExactRoot::from_int(1)]
            }
        );
        let third = ExactRoot::surd(Rational::new(1, 3), crate::scalar::Sign::Plus).unwrap();
        assert_eq!(
            rep.scalar_flat(domain),
            ConditionVerdict::IffHIn {
                values: vec![third]
            }
        );
        assert_eq!(
            rep.star_scalar_flat(domain),
            ConditionVerdict::IffHIn {
                values: vec![ExactRoot::from_int(0)]
            }
        );
        assert_eq!(rep.einstein(&s.g, domain), ConditionVerdict::Never);

        let ece = rep.eta_complex_einstein(&s, domain);
        assert_eq!(ece.verdict, ConditionVerdict::Identically);
        assert_eq!(
            ece.solution,
            Some([poly(&[0, 0, -2]), poly(&[0, -2]), poly(&[2, 2])])
        );
    }

    #[test]
    fn verdicts_for_vii_subtype_two() {
        let (s, rep) = report(BianchiType::VIIh, 2);
        let domain = HDomain::NonNegative;
        assert_eq!(
            rep.horizontal_flat(domain),
            ConditionVerdict::IffHIn {
                values: vec![ExactRoot::from_int(1)]
            }
        );
        assert_eq!(
            rep.horizontal_star_ricci_flat(domain),
            ConditionVerdict::IffHIn {
                values: vec![ExactRoot::from_int(1)]
            }
        );
        let prop = rep.horizontal_proportionality(&s, domain);
        assert_eq!(prop.verdict, ConditionVerdict::Identically);
        assert_eq!(prop.factor, Some(poly(&[-1, 0, 1])));
        let ece = rep.eta_complex_einstein(&s, domain);
        assert_eq!(ece.verdict, ConditionVerdict::Never);
    }

    #[test]
    fn verdict_serialization() {
        let v = ConditionVerdict::IffHIn {
            values: vec![ExactRoot::from_int(0)],
        };
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["verdict"], "iff-h-in");
        let back: ConditionVerdict = serde_json::from_value(json).unwrap();
        assert_eq!(back, v);

        let v = ConditionVerdict::Identically;
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"{"verdict":"identically"}"#);
    }

    #[test]
    fn verdict_at_rational() {
        let v = ConditionVerdict::IffHIn {
            values: vec![ExactRoot::from_int(1)],
        };
        assert_eq!(v.at_rational(&Rational::from_int(1)), Some(true));
        assert_eq!(v.at_rational(&Rational::from_int(2)), Some(false));
        assert_eq!(
            ConditionVerdict::Identically.at_rational(&Rational::zero()),
            Some(true)
        );
    }

    #[test]
    fn rendering_of_curvature_components() {
        let (_, rep) = report(BianchiType::VIh, 3);
        let rows = rep.tensor.nonzero_components();
        assert!(rows.contains(&"R_1212 = h^2+1".to_string()));
        assert!(rows.contains(&"R_1223 = 2h".to_string()));
        assert_eq!(rows.len(), 4);
    }
}
