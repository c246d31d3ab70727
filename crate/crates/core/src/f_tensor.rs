//! The fundamental tensor F, Lee forms, and the basic-class decomposition.
//!
//! `F(x, y, z) = g((nabla_x phi) y, z)` measures the failure of phi to be
//! parallel. In dimension three the admissible tensors form the direct sum
//! of seven basic classes, labelled F1, F4, F5, F8, F9, F10, F11 by
//! convention (the remaining four labels of the general classification are
//! empty in this dimension), cut out by nine scalar parameters
//!
//! ```text
//! theta_1, theta_2    (F1)     theta_3 (F4)    theta*_3 (F5)
//! lambda (F8)    mu (F9)    nu (F10)    omega_1, omega_2 (F11)
//! ```
//!
//! `decompose` extracts the parameters from component identities and then
//! rebuilds the tensor from the closed-form class expressions; any
//! discrepancy means the input is not an admissible fundamental tensor and
//! is reported with the identity that fails. The zero tensor is the
//! cosymplectic class F0.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::acb_structure::AcbStructure;
use crate::connection::ConnectionCoefficients;
use crate::matrix::{basis, bilinear, mat_vec, ten3, vec3, vec3_from_i64, Mat3, Ten3, Vec3, DIM};
use crate::scalar::{ExactRoot, HDomain, Rational, Scalar, ScalarError};

/// Errors from Lee form extraction and class decomposition.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FError {
    /// One of the component identities that cut out the admissible class
    /// fails; the identity is quoted in 1-based index notation.
    #[error("inadmissible fundamental tensor: identity {identity} fails")]
    BrokenIdentity { identity: String },
    /// The tensor satisfies the pairwise identities but differs from the
    /// closed-form reconstruction at the quoted component.
    #[error("inadmissible fundamental tensor: reconstruction residual at F_{i}{j}{k}")]
    ReconstructionResidual { i: usize, j: usize, k: usize },
    /// The contraction definition and the component formulas for a Lee
    /// form disagree, so the tensor is outside the admissible class.
    #[error("Lee form {form} component {component} disagrees between contraction and component formulas")]
    LeeFormMismatch { form: &'static str, component: usize },
    /// Lee form contraction needs the basis adapted to the structure.
    #[error("structure basis is not adapted: xi must be e3 with eta its dual")]
    UnadaptedBasis,
}

/// Components `F_ijk = F(e_i, e_j, e_k)`, stored 0-based as `f[i][j][k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FTensor {
    f: Ten3,
}

impl FTensor {
    pub fn new(f: Ten3) -> Self {
        FTensor { f }
    }

    pub fn components(&self) -> &Ten3 {
        &self.f
    }

    /// `F(e_{i+1}, e_{j+1}, e_{k+1})`.
    pub fn component(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.f[i][j][k]
    }

    pub fn is_zero(&self) -> bool {
        self.f
            .iter()
            .all(|p| p.iter().all(|r| r.iter().all(Scalar::is_zero)))
    }

    /// Nonzero components rendered as `F_123 = -h`, in index order.
    pub fn nonzero_components(&self) -> Vec<String> {
        let mut out = Vec::new();
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    if !self.f[i][j][k].is_zero() {
                        out.push(format!(
                            "F_{}{}{} = {}",
                            i + 1,
                            j + 1,
                            k + 1,
                            self.f[i][j][k]
                        ));
                    }
                }
            }
        }
        out
    }
}

/// `(nabla_{e_i} phi) e_j` as a coordinate vector.
fn nabla_phi(gamma: &ConnectionCoefficients, s: &AcbStructure, i: usize, j: usize) -> Vec3 {
    // nabla_i (phi e_j) - phi (nabla_i e_j), with phi e_j expanded over the
    // basis so only connection coefficients appear.
    let mut first = crate::matrix::vec3_zero();
    for m in 0..DIM {
        let scaled = vec3(|r| &s.phi[m][j] * &gamma.derivative(i, m)[r]);
        first = crate::matrix::vec_add(&first, &scaled);
    }
    let second = mat_vec(&s.phi, gamma.derivative(i, j));
    crate::matrix::vec_sub(&first, &second)
}

/// Fundamental tensor of the structure for the given Levi-Civita table.
pub fn compute_f(gamma: &ConnectionCoefficients, s: &AcbStructure) -> FTensor {
    let f = ten3(|i, j, k| bilinear(&s.g, &nabla_phi(gamma, s, i, j), &basis(k)));
    FTensor { f }
}

/// Square norm `g^{ij} g^{ks} g((nabla_{e_i} phi) e_k, (nabla_{e_j} phi) e_s)`.
/// Zero does not force the tensor itself to vanish because g is indefinite;
/// structures with `F != 0` but vanishing norm are isotropic-cosymplectic.
pub fn square_norm_nabla_phi(
    gamma: &ConnectionCoefficients,
    s: &AcbStructure,
    g_inv: &Mat3,
) -> Scalar {
    let v = vec![
        vec![nabla_phi(gamma, s, 0, 0), nabla_phi(gamma, s, 0, 1), nabla_phi(gamma, s, 0, 2)],
        vec![nabla_phi(gamma, s, 1, 0), nabla_phi(gamma, s, 1, 1), nabla_phi(gamma, s, 1, 2)],
        vec![nabla_phi(gamma, s, 2, 0), nabla_phi(gamma, s, 2, 1), nabla_phi(gamma, s, 2, 2)],
    ];
    let mut acc = Scalar::zero();
    for i in 0..DIM {
        for j in 0..DIM {
            if g_inv[i][j].is_zero() {
                continue;
            }
            for k in 0..DIM {
                for t in 0..DIM {
                    if g_inv[k][t].is_zero() {
                        continue;
                    }
                    let inner = bilinear(&s.g, &v[i][k], &v[j][t]);
                    acc = &acc + &(&(&g_inv[i][j] * &g_inv[k][t]) * &inner);
                }
            }
        }
    }
    acc
}

/// The three Lee forms as component vectors on the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeeForms {
    pub theta: Vec3,
    pub theta_star: Vec3,
    pub omega: Vec3,
}

/// Lee forms computed two ways: by the defining contractions
/// `theta(z) = g^{ij} F(e_i, e_j, z)` (indices over the horizontal basis
/// vectors, with `omega(z) = F(xi, xi, z)`), and by the dimension-three
/// component formulas. The two agree exactly on admissible tensors, so a
/// mismatch is reported as an admissibility failure.
pub fn lee_forms(f: &FTensor, s: &AcbStructure, g_inv: &Mat3) -> Result<LeeForms, FError> {
    if s.xi != vec3_from_i64([0, 0, 1]) || s.eta != vec3_from_i64([0, 0, 1]) {
        return Err(FError::UnadaptedBasis);
    }

    // Contraction path. The horizontal block of g_inv is the inverse of the
    // horizontal block of g because the basis is adapted (g(e_a, xi) = 0).
    let horizontal = 0..2;
    let theta_a = vec3(|k| {
        let mut acc = Scalar::zero();
        for i in horizontal.clone() {
            for j in horizontal.clone() {
                acc = &acc + &(&g_inv[i][j] * &f.f[i][j][k]);
            }
        }
        acc
    });
    let theta_star_a = vec3(|k| {
        let mut acc = Scalar::zero();
        for i in horizontal.clone() {
            for j in horizontal.clone() {
                for m in 0..DIM {
                    acc = &acc + &(&(&g_inv[i][j] * &s.phi[m][j]) * &f.f[i][m][k]);
                }
            }
        }
        acc
    });
    let omega_a = vec3(|k| f.f[2][2][k].clone());

    // Component path.
    let c = |i: usize, j: usize, k: usize| &f.f[i - 1][j - 1][k - 1];
    let theta_b = [
        c(1, 1, 1) - c(2, 2, 1),
        c(1, 1, 2) - c(2, 1, 1),
        c(1, 1, 3) - c(2, 2, 3),
    ];
    let theta_star_b = [
        c(1, 1, 2) + c(2, 1, 1),
        c(1, 1, 1) + c(2, 2, 1),
        c(1, 2, 3) + c(2, 1, 3),
    ];
    let omega_b = [c(3, 3, 1).clone(), c(3, 3, 2).clone(), Scalar::zero()];

    let pairs: [(&'static str, &Vec3, &Vec3); 3] = [
        ("theta", &theta_a, &theta_b),
        ("theta*", &theta_star_a, &theta_star_b),
        ("omega", &omega_a, &omega_b),
    ];
    for (form, a, b) in pairs {
        for k in 0..DIM {
            if a[k] != b[k] {
                return Err(FError::LeeFormMismatch {
                    form,
                    component: k + 1,
                });
            }
        }
    }

    Ok(LeeForms {
        theta: theta_a,
        theta_star: theta_star_a,
        omega: omega_a,
    })
}

/// The nine scalar parameters of an admissible fundamental tensor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassParameters {
    pub theta1: Scalar,
    pub theta2: Scalar,
    pub theta3: Scalar,
    pub lambda: Scalar,
    pub theta_star3: Scalar,
    pub mu: Scalar,
    pub nu: Scalar,
    pub omega1: Scalar,
    pub omega2: Scalar,
}

impl ClassParameters {
    pub fn is_zero(&self) -> bool {
        self.all().iter().all(|p| p.is_zero())
    }

    fn all(&self) -> [&Scalar; 9] {
        [
            &self.theta1,
            &self.theta2,
            &self.theta3,
            &self.lambda,
            &self.theta_star3,
            &self.mu,
            &self.nu,
            &self.omega1,
            &self.omega2,
        ]
    }

    /// Substitutes a rational h into every parameter.
    pub fn specialize(&self, h: &Rational) -> Self {
        ClassParameters {
            theta1: self.theta1.specialize(h),
            theta2: self.theta2.specialize(h),
            theta3: self.theta3.specialize(h),
            lambda: self.lambda.specialize(h),
            theta_star3: self.theta_star3.specialize(h),
            mu: self.mu.specialize(h),
            nu: self.nu.specialize(h),
            omega1: self.omega1.specialize(h),
            omega2: self.omega2.specialize(h),
        }
    }
}

/// Extracts the class parameters, verifying every identity that cuts out
/// the admissible class; the first failed identity is reported by name.
pub fn decompose(f: &FTensor) -> Result<ClassParameters, FError> {
    let c = |i: usize, j: usize, k: usize| &f.f[i - 1][j - 1][k - 1];

    let equal_pairs = [
        ((1, 2, 2), (1, 1, 1)),
        ((2, 2, 2), (2, 1, 1)),
        ((1, 3, 1), (1, 1, 3)),
        ((2, 3, 2), (2, 2, 3)),
        ((1, 3, 2), (1, 2, 3)),
        ((2, 3, 1), (2, 1, 3)),
        ((3, 1, 1), (3, 2, 2)),
        ((3, 1, 3), (3, 3, 1)),
        ((3, 2, 3), (3, 3, 2)),
    ];
    for ((a1, a2, a3), (b1, b2, b3)) in equal_pairs {
        if c(a1, a2, a3) != c(b1, b2, b3) {
            return Err(FError::BrokenIdentity {
                identity: format!("F_{a1}{a2}{a3} = F_{b1}{b2}{b3}"),
            });
        }
    }

    let zero_slots = [
        (1, 1, 2),
        (1, 2, 1),
        (2, 1, 2),
        (2, 2, 1),
        (1, 3, 3),
        (2, 3, 3),
        (3, 1, 2),
        (3, 2, 1),
        (3, 3, 3),
    ];
    for (i, j, k) in zero_slots {
        if !c(i, j, k).is_zero() {
            return Err(FError::BrokenIdentity {
                identity: format!("F_{i}{j}{k} = 0"),
            });
        }
    }

    let half = Rational::new(1, 2);
    let params = ClassParameters {
        theta1: c(1, 1, 1).clone(),
        theta2: -c(2, 1, 1),
        theta3: c(1, 1, 3) - c(2, 2, 3),
        lambda: (c(1, 1, 3) + c(2, 2, 3)).scale(&half),
        theta_star3: c(1, 2, 3) + c(2, 1, 3),
        mu: (c(1, 2, 3) - c(2, 1, 3)).scale(&half),
        nu: c(3, 1, 1).clone(),
        omega1: c(3, 3, 1).clone(),
        omega2: c(3, 3, 2).clone(),
    };

    // The closed-form reconstruction must reproduce the input exactly;
    // this re-derives every component from the parameters through the
    // class expressions, independently of the identity list above.
    let rebuilt = reconstruct(&params);
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                if rebuilt.f[i][j][k] != f.f[i][j][k] {
                    return Err(FError::ReconstructionResidual {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                    });
                }
            }
        }
    }

    Ok(params)
}

/// Rebuilds the tensor from the parameters by evaluating the closed-form
/// basic-class expressions on basis triples.
pub fn reconstruct(p: &ClassParameters) -> FTensor {
    let kron = |i: usize, j: usize| {
        if i == j {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    };
    let half = Rational::new(1, 2);
    let f = ten3(|a, b, c| {
        // Shared bilinear factors in y = e_{b+1}, z = e_{c+1}.
        let plane = &(&kron(b, 0) * &kron(c, 0)) + &(&kron(b, 1) * &kron(c, 1));
        let raise1 = &(&kron(b, 2) * &kron(c, 0)) + &(&kron(b, 0) * &kron(c, 2));
        let raise2 = &(&kron(b, 2) * &kron(c, 1)) + &(&kron(b, 1) * &kron(c, 2));

        let f1 = &(&(&kron(a, 0) * &p.theta1) - &(&kron(a, 1) * &p.theta2)) * &plane;
        let f4 = &p.theta3.scale(&half) * &(&(&kron(a, 0) * &raise1) - &(&kron(a, 1) * &raise2));
        let f5 =
            &p.theta_star3.scale(&half) * &(&(&kron(a, 0) * &raise2) + &(&kron(a, 1) * &raise1));
        let f8 = &p.lambda * &(&(&kron(a, 0) * &raise1) + &(&kron(a, 1) * &raise2));
        let f9 = &p.mu * &(&(&kron(a, 0) * &raise2) - &(&kron(a, 1) * &raise1));
        let f10 = &(&p.nu * &kron(a, 2)) * &plane;
        let f11 = &kron(a, 2) * &(&(&raise1 * &p.omega1) + &(&raise2 * &p.omega2));

        [f1, f4, f5, f8, f9, f10, f11].into_iter().sum()
    });
    FTensor { f }
}

/// The seven basic classes that can occur in dimension three.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BasicClass {
    F1,
    F4,
    F5,
    F8,
    F9,
    F10,
    F11,
}

impl BasicClass {
    pub const ALL: [BasicClass; 7] = [
        BasicClass::F1,
        BasicClass::F4,
        BasicClass::F5,
        BasicClass::F8,
        BasicClass::F9,
        BasicClass::F10,
        BasicClass::F11,
    ];

    /// The parameters whose vanishing removes the class from the label.
    fn parameters<'a>(&self, p: &'a ClassParameters) -> Vec<&'a Scalar> {
        match self {
            BasicClass::F1 => vec![&p.theta1, &p.theta2],
            BasicClass::F4 => vec![&p.theta3],
            BasicClass::F5 => vec![&p.theta_star3],
            BasicClass::F8 => vec![&p.lambda],
            BasicClass::F9 => vec![&p.mu],
            BasicClass::F10 => vec![&p.nu],
            BasicClass::F11 => vec![&p.omega1, &p.omega2],
        }
    }
}

impl fmt::Display for BasicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Classification verdict: the direct-sum label valid for generic h, plus
/// the exceptional parameter values where the label shrinks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassLabel {
    pub members: BTreeSet<BasicClass>,
    pub exceptional: Vec<(ExactRoot, BTreeSet<BasicClass>)>,
}

impl ClassLabel {
    /// True for the cosymplectic class, where F vanishes identically.
    pub fn is_cosymplectic(&self) -> bool {
        self.members.is_empty()
    }
}

/// Renders a member set in the direct-sum style, `F0` when empty.
pub fn class_set_display(members: &BTreeSet<BasicClass>) -> String {
    if members.is_empty() {
        return "F0".to_string();
    }
    members
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" (+) ")
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", class_set_display(&self.members))?;
        for (root, at) in &self.exceptional {
            write!(f, "; at h = {root}: {}", class_set_display(at))?;
        }
        Ok(())
    }
}

fn member_set(p: &ClassParameters, alive: impl Fn(&Scalar) -> bool) -> BTreeSet<BasicClass> {
    BasicClass::ALL
        .into_iter()
        .filter(|class| class.parameters(p).into_iter().any(&alive))
        .collect()
}

/// Class label of the parameters over the given h-domain. Membership is
/// decided by identical vanishing of the class parameters; exceptional
/// entries record the in-domain roots of the surviving parameters, where
/// the label degenerates to a smaller one.
pub fn classify(p: &ClassParameters, domain: HDomain) -> Result<ClassLabel, ScalarError> {
    let members = member_set(p, |s| !s.is_zero());
    let mut roots = BTreeSet::new();
    for class in &members {
        for param in class.parameters(p) {
            if param.is_zero() || param.is_constant() {
                continue;
            }
            for r in param.exact_roots()? {
                if domain.contains_root(&r) {
                    roots.insert(r);
                }
            }
        }
    }
    let mut exceptional = Vec::new();
    for r in roots {
        let at = member_set(p, |s| !s.vanishes_at(&r));
        if at != members {
            exceptional.push((r, at));
        }
    }
    Ok(ClassLabel {
        members,
        exceptional,
    })
}
