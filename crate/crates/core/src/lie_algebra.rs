//! Three-dimensional real Lie algebras and the Bianchi catalog.
//!
//! A Lie algebra is carried as its structure constant tensor on the fixed
//! basis e1, e2, e3. The catalog enumerates every Bianchi type in the three
//! subtype presentations adapted to the contact direction e3; subtypes of
//! one type differ by the cyclic basis change e1 -> e2 -> e3 -> e1. Types
//! VI and VII are one-parameter families in `h` (with `h <= 0` and `h >= 0`
//! respectively); type III coincides with the VI family at `h = -1` and is
//! kept as its own label because the geometry assignments distinguish it.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::matrix::{basis, ten3, vec3, vec_is_zero, Ten3, Vec3, DIM};
use crate::scalar::{HDomain, Rational, Scalar};

/// Errors from algebra construction and catalog lookups.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// `c^k_{ij} != -c^k_{ji}` for the 1-based indices carried here.
    #[error("antisymmetry violated: c^{k}_{{{i}{j}}} != -c^{k}_{{{j}{i}}}")]
    AntisymmetryViolation { i: usize, j: usize, k: usize },
    /// The bracket table fails the Jacobi identity, so it is not a Lie algebra.
    #[error("structure constants violate the Jacobi identity")]
    JacobiFailure,
    /// Subtype out of range for the type (I and IX admit only subtype 1).
    #[error("type {ty} has no subtype {subtype}")]
    InvalidSubtype { ty: BianchiType, subtype: u8 },
    /// A concrete `h` was supplied for a type that has no parameter.
    #[error("type {0} does not depend on the parameter h")]
    NotParametric(BianchiType),
}

/// Structure constants `c^k_ij` of a bracket table, `[e_i, e_j] = sum_k
/// c^k_ij e_k`, stored as `c[i][j][k]` with 0-based indices. Antisymmetry
/// in `i, j` is enforced on construction; the Jacobi identity is a separate
/// check so that non-Lie tables can be diagnosed rather than rejected
/// silently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    c: Ten3,
}

impl StructureConstants {
    pub fn new(c: Ten3) -> Result<Self, AlgebraError> {
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    if c[i][j][k] != -&c[j][i][k] {
                        return Err(AlgebraError::AntisymmetryViolation {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                        });
                    }
                }
            }
        }
        Ok(StructureConstants { c })
    }

    /// Builds the tensor from the three independent brackets
    /// `[e1,e2]`, `[e2,e3]`, `[e3,e1]`; the rest follows by antisymmetry.
    pub fn from_brackets(b12: Vec3, b23: Vec3, b31: Vec3) -> Self {
        let mut c = ten3(|_, _, _| Scalar::zero());
        let pairs = [(0usize, 1usize, b12), (1, 2, b23), (2, 0, b31)];
        for (i, j, b) in pairs {
            for k in 0..DIM {
                c[i][j][k] = b[k].clone();
                c[j][i][k] = -&b[k];
            }
        }
        StructureConstants { c }
    }

    pub fn constants(&self) -> &Ten3 {
        &self.c
    }

    /// Coefficient of `e_{k+1}` in `[e_{i+1}, e_{j+1}]`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[i][j][k]
    }

    /// Lie bracket of two coordinate vectors, extended bilinearly from the
    /// basis brackets.
    pub fn bracket(&self, v: &Vec3, w: &Vec3) -> Vec3 {
        vec3(|k| {
            let mut acc = Scalar::zero();
            for i in 0..DIM {
                for j in 0..DIM {
                    acc = &acc + &(&(&v[i] * &w[j]) * &self.c[i][j][k]);
                }
            }
            acc
        })
    }

    /// Jacobi identity `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0` on all basis
    /// triples, as a polynomial identity in h.
    pub fn check_jacobi(&self) -> bool {
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let mut sum = self.bracket(&self.c[i][j], &basis(k));
                    let t2 = self.bracket(&self.c[j][k], &basis(i));
                    let t3 = self.bracket(&self.c[k][i], &basis(j));
                    for m in 0..DIM {
                        sum[m] = &(&sum[m] + &t2[m]) + &t3[m];
                    }
                    if !vec_is_zero(&sum) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Pushes the table through the cyclic basis change
    /// e1 -> e2 -> e3 -> e1. Applied to subtype (k) of a catalog type this
    /// produces subtype (k mod 3 + 1).
    pub fn cyclic_shift(&self) -> Self {
        let s = |i: usize| (i + 1) % DIM;
        let mut c = ten3(|_, _, _| Scalar::zero());
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    c[s(i)][s(j)][s(k)] = self.c[i][j][k].clone();
                }
            }
        }
        StructureConstants { c }
    }

    /// Substitutes a rational value for h in every entry.
    pub fn specialize(&self, h: &Rational) -> Self {
        StructureConstants {
            c: ten3(|i, j, k| self.c[i][j][k].specialize(h)),
        }
    }

    /// The three independent brackets rendered as in the catalog table.
    pub fn bracket_text(&self) -> [String; 3] {
        let pairs = [(0usize, 1usize), (1, 2), (2, 0)];
        pairs.map(|(i, j)| {
            format!("[e{},e{}]={}", i + 1, j + 1, render_combination(&self.c[i][j]))
        })
    }
}

/// Renders a coordinate vector as a basis combination, `o` when zero,
/// otherwise in the style `he1-e2` or `(h^2+1)e3`.
pub fn render_combination(v: &Vec3) -> String {
    if vec_is_zero(v) {
        return "o".to_string();
    }
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (sign, magnitude) = match c.as_monomial() {
            Some((a, k)) => {
                let m = Scalar::monomial(a.abs(), k);
                let body = if m.is_constant() && m.coeff(0).is_one() {
                    String::new()
                } else {
                    m.to_string()
                };
                (a.is_negative(), body)
            }
            None => (false, format!("({c})")),
        };
        if sign {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        out.push_str(&magnitude);
        out.push_str(&format!("e{}", i + 1));
    }
    out
}

impl Serialize for StructureConstants {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("StructureConstants", 1)?;
        st.serialize_field("c", &self.c)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for StructureConstants {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            c: Ten3,
        }
        let raw = Raw::deserialize(deserializer)?;
        StructureConstants::new(raw.c).map_err(serde::de::Error::custom)
    }
}

/// The nine Bianchi types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BianchiType {
    I,
    II,
    III,
    IV,
    V,
    VIh,
    VIIh,
    VIII,
    IX,
}

impl BianchiType {
    pub const ALL: [BianchiType; 9] = [
        BianchiType::I,
        BianchiType::II,
        BianchiType::III,
        BianchiType::IV,
        BianchiType::V,
        BianchiType::VIh,
        BianchiType::VIIh,
        BianchiType::VIII,
        BianchiType::IX,
    ];

    /// I and IX are invariant under the cyclic basis change, so they carry a
    /// single subtype; every other type has three.
    pub fn subtype_count(&self) -> u8 {
        match self {
            BianchiType::I | BianchiType::IX => 1,
            _ => 3,
        }
    }

    pub fn is_parametric(&self) -> bool {
        matches!(self, BianchiType::VIh | BianchiType::VIIh)
    }

    /// Admissible range of h for the parametric families; unconstrained
    /// elsewhere.
    pub fn h_domain(&self) -> HDomain {
        match self {
            BianchiType::VIh => HDomain::NonPositive,
            BianchiType::VIIh => HDomain::NonNegative,
            _ => HDomain::All,
        }
    }
}

impl fmt::Display for BianchiType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            BianchiType::I => "I",
            BianchiType::II => "II",
            BianchiType::III => "III",
            BianchiType::IV => "IV",
            BianchiType::V => "V",
            BianchiType::VIh => "VI_h",
            BianchiType::VIIh => "VII_h",
            BianchiType::VIII => "VIII",
            BianchiType::IX => "IX",
        };
        write!(f, "{tag}")
    }
}

impl FromStr for BianchiType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        match key.as_str() {
            "I" => Ok(BianchiType::I),
            "II" => Ok(BianchiType::II),
            "III" => Ok(BianchiType::III),
            "IV" => Ok(BianchiType::IV),
            "V" => Ok(BianchiType::V),
            "VI" | "VI_H" | "VIH" => Ok(BianchiType::VIh),
            "VII" | "VII_H" | "VIIH" => Ok(BianchiType::VIIh),
            "VIII" => Ok(BianchiType::VIII),
            "IX" => Ok(BianchiType::IX),
            _ => Err(format!(
                "unknown Bianchi type {s:?}; expected one of I, II, III, IV, V, VI_h, VII_h, VIII, IX"
            )),
        }
    }
}

/// Value of the family parameter attached to a parametric catalog entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HValue {
    /// The indeterminate h itself; results are polynomial identities.
    Symbolic,
    /// A concrete rational value.
    Rational(Rational),
}

impl fmt::Display for HValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HValue::Symbolic => write!(f, "h"),
            HValue::Rational(r) => write!(f, "{r}"),
        }
    }
}

/// Identifier of one catalog row: type, subtype, and for the VI/VII
/// families the value of h (defaulting to the symbolic parameter).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BianchiId {
    ty: BianchiType,
    subtype: u8,
    h: Option<HValue>,
}

impl BianchiId {
    pub fn new(ty: BianchiType, subtype: u8) -> Result<Self, AlgebraError> {
        if subtype == 0 || subtype > ty.subtype_count() {
            return Err(AlgebraError::InvalidSubtype { ty, subtype });
        }
        let h = ty.is_parametric().then_some(HValue::Symbolic);
        Ok(BianchiId { ty, subtype, h })
    }

    /// Pins the family parameter to a concrete rational. Only the VI and
    /// VII families carry the parameter.
    pub fn with_h(mut self, h: Rational) -> Result<Self, AlgebraError> {
        if !self.ty.is_parametric() {
            return Err(AlgebraError::NotParametric(self.ty));
        }
        self.h = Some(HValue::Rational(h));
        Ok(self)
    }

    pub fn ty(&self) -> BianchiType {
        self.ty
    }

    pub fn subtype(&self) -> u8 {
        self.subtype
    }

    pub fn h_value(&self) -> Option<&HValue> {
        self.h.as_ref()
    }

    /// True when the entry still depends on the symbolic parameter.
    pub fn is_symbolic(&self) -> bool {
        matches!(self.h, Some(HValue::Symbolic))
    }

    /// The h to substitute into the catalog bracket patterns. Types without
    /// a parameter never read it.
    fn h_scalar(&self) -> Scalar {
        match &self.h {
            Some(HValue::Symbolic) | None => Scalar::h(),
            Some(HValue::Rational(r)) => Scalar::constant(r.clone()),
        }
    }

    pub fn h_domain(&self) -> HDomain {
        self.ty.h_domain()
    }

    /// A concrete h outside the family's admissible range is legal input
    /// (the algebra exists) but flagged, since the catalog splits the
    /// VI/VII patterns along the sign of h.
    pub fn domain_warning(&self) -> Option<String> {
        if let Some(HValue::Rational(r)) = &self.h {
            if !self.h_domain().contains_rational(r) {
                return Some(format!(
                    "h = {r} lies outside the {} domain ({})",
                    self.ty,
                    self.h_domain()
                ));
            }
        }
        None
    }

    /// Row label in the catalog style, e.g. `Bia(VI_h)(2)`.
    pub fn label(&self) -> String {
        match &self.h {
            Some(HValue::Rational(r)) => format!("Bia({})({}) at h={r}", self.ty, self.subtype),
            _ => format!("Bia({})({})", self.ty, self.subtype),
        }
    }

    /// Every catalog row (symbolic h for the parametric families), in
    /// catalog order.
    pub fn all_rows() -> Vec<BianchiId> {
        let mut rows = Vec::new();
        for ty in BianchiType::ALL {
            for subtype in 1..=ty.subtype_count() {
                rows.push(BianchiId::new(ty, subtype).expect("valid subtype"));
            }
        }
        rows
    }
}

impl fmt::Display for BianchiId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Structure constants of the catalog entry, with the entry's h value
/// substituted into the bracket pattern.
pub fn catalog_algebra(id: &BianchiId) -> StructureConstants {
    let h = id.h_scalar();
    let table = match id.ty() {
        BianchiType::III => vi_family(&Scalar::from_int(-1), id.subtype()),
        BianchiType::VIh => vi_family(&h, id.subtype()),
        BianchiType::VIIh => vii_family(&h, id.subtype()),
        ty => fixed_table(ty, id.subtype()),
    };
    debug_assert!(table.check_jacobi(), "catalog entry must be a Lie algebra");
    table
}

fn e(i: usize) -> Vec3 {
    basis(i - 1)
}

fn o() -> Vec3 {
    crate::matrix::vec3_zero()
}

/// Linear combination `a*e1 + b*e2 + c*e3` with scalar coefficients.
fn comb(a: Scalar, b: Scalar, c: Scalar) -> Vec3 {
    [a, b, c]
}

fn fixed_table(ty: BianchiType, subtype: u8) -> StructureConstants {
    use crate::matrix::vec_neg as neg;
    use crate::matrix::vec_sub as sub;
    let (b12, b23, b31) = match (ty, subtype) {
        (BianchiType::I, 1) => (o(), o(), o()),

        (BianchiType::II, 1) => (o(), e(1), o()),
        (BianchiType::II, 2) => (o(), o(), e(2)),
        (BianchiType::II, 3) => (e(3), o(), o()),

        (BianchiType::IV, 1) => (o(), sub(&e(1), &e(2)), e(1)),
        (BianchiType::IV, 2) => (e(2), o(), sub(&e(2), &e(3))),
        (BianchiType::IV, 3) => (sub(&e(3), &e(1)), e(3), o()),

        (BianchiType::V, 1) => (o(), e(2), e(1)),
        (BianchiType::V, 2) => (e(2), o(), e(3)),
        (BianchiType::V, 3) => (e(1), e(3), o()),

        (BianchiType::VIII, 1) => (neg(&e(3)), e(1), e(2)),
        (BianchiType::VIII, 2) => (e(3), neg(&e(1)), e(2)),
        (BianchiType::VIII, 3) => (e(3), e(1), neg(&e(2))),

        (BianchiType::IX, 1) => (e(3), e(1), e(2)),

        _ => unreachable!("validated subtype"),
    };
    StructureConstants::from_brackets(b12, b23, b31)
}

/// Bia(VI_h) bracket patterns; subtype (1) is
/// `[e2,e3] = e1 - h e2, [e3,e1] = h e1 - e2`.
fn vi_family(h: &Scalar, subtype: u8) -> StructureConstants {
    let one = Scalar::one;
    let zero = Scalar::zero;
    let (b12, b23, b31) = match subtype {
        1 => (
            o(),
            comb(one(), -h, zero()),
            comb(h.clone(), -one(), zero()),
        ),
        2 => (
            comb(zero(), h.clone(), -one()),
            o(),
            comb(zero(), one(), -h),
        ),
        3 => (
            comb(-h, zero(), one()),
            comb(-one(), zero(), h.clone()),
            o(),
        ),
        _ => unreachable!("validated subtype"),
    };
    StructureConstants::from_brackets(b12, b23, b31)
}

/// Bia(VII_h) bracket patterns; subtype (1) is
/// `[e2,e3] = e1 - h e2, [e3,e1] = h e1 + e2`.
fn vii_family(h: &Scalar, subtype: u8) -> StructureConstants {
    let one = Scalar::one;
    let zero = Scalar::zero;
    let (b12, b23, b31) = match subtype {
        1 => (
            o(),
            comb(one(), -h, zero()),
            comb(h.clone(), one(), zero()),
        ),
        2 => (
            comb(zero(), h.clone(), one()),
            o(),
            comb(zero(), one(), -h),
        ),
        3 => (
            comb(-h, zero(), one()),
            comb(one(), zero(), h.clone()),
            o(),
        ),
        _ => unreachable!("validated subtype"),
    };
    StructureConstants::from_brackets(b12, b23, b31)
}

/// The eight simply connected three-dimensional model geometries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ThurstonGeometry {
    Euclidean,
    Nil,
    HyperbolicPlaneTimesLine,
    Hyperbolic,
    Solv,
    SlTildeTwo,
    Sphere,
    /// Listed for completeness: no Bianchi group realizes it, so the lookup
    /// never returns this tag.
    SphereTimesLine,
}

impl fmt::Display for ThurstonGeometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            ThurstonGeometry::Euclidean => "E^3",
            ThurstonGeometry::Nil => "Nil",
            ThurstonGeometry::HyperbolicPlaneTimesLine => "H^2 x R",
            ThurstonGeometry::Hyperbolic => "H^3",
            ThurstonGeometry::Solv => "Solv",
            ThurstonGeometry::SlTildeTwo => "SL~(2,R)",
            ThurstonGeometry::Sphere => "S^3",
            ThurstonGeometry::SphereTimesLine => "S^2 x R",
        };
        write!(f, "{tag}")
    }
}

/// Model geometry carried by the simply connected group of the entry, when
/// there is one. Blank cells of the assignment table (IV, VI with h < 0,
/// VII with h > 0) return `None`; for the parametric families the answer
/// depends on whether h is pinned to zero.
pub fn thurston_geometry(id: &BianchiId) -> Option<ThurstonGeometry> {
    let h_is_zero = matches!(id.h_value(), Some(HValue::Rational(r)) if r.is_zero());
    match id.ty() {
        BianchiType::I => Some(ThurstonGeometry::Euclidean),
        BianchiType::II => Some(ThurstonGeometry::Nil),
        BianchiType::III => Some(ThurstonGeometry::HyperbolicPlaneTimesLine),
        BianchiType::IV => None,
        BianchiType::V => Some(ThurstonGeometry::Hyperbolic),
        BianchiType::VIh => h_is_zero.then_some(ThurstonGeometry::Solv),
        BianchiType::VIIh => h_is_zero.then_some(ThurstonGeometry::Euclidean),
        BianchiType::VIII => Some(ThurstonGeometry::SlTildeTwo),
        BianchiType::IX => Some(ThurstonGeometry::Sphere),
    }
}
