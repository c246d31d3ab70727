//! Re-derives the full catalog and compares every stage against frozen
//! reference tables: structure constants relations, model geometries, class
//! labels, fundamental tensor components, connection tables, curvature
//! blocks and the iff-conditions for the parametric families.
//!
//! Each comparison is a named check; `run_all` returns them sorted by name
//! so the output is stable. The fault hook feeds a deliberately corrupted
//! bracket table through the pipeline to demonstrate that the frozen tables
//! catch regressions rather than vacuously passing.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::acb_structure::AcbStructure;
use crate::connection::check_connection;
use crate::curvature::{section_kinds, ConditionVerdict, SectionKind};
use crate::lie_algebra::{
    catalog_algebra, thurston_geometry, BianchiId, BianchiType, StructureConstants,
    ThurstonGeometry,
};
use crate::matrix::{basis, mat3_from_i64, signature, vec_scale, vec3_zero, Vec3, DIM};
use crate::report::{AlgebraSource, ManifoldAnalysis};
use crate::scalar::{sign_on_domain, ExactRoot, HDomain, Rational, Scalar, Sign, SignVerdict};

/// Outcome of a single named comparison. `detail` is present only on
/// failure and says what was expected and what was computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    /// Per-group pass counts followed by the total. The group of a check is
    /// the segment of its name before the first slash.
    pub fn summary_lines(&self) -> Vec<String> {
        let mut groups: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for c in &self.checks {
            let g = c.name.split('/').next().unwrap_or("");
            let e = groups.entry(g).or_insert((0, 0));
            e.1 += 1;
            if c.passed {
                e.0 += 1;
            }
        }
        let mut lines: Vec<String> = groups
            .iter()
            .map(|(g, (p, t))| format!("{g:<18} {p}/{t}"))
            .collect();
        let total = self.checks.len();
        let pass = self.checks.iter().filter(|c| c.passed).count();
        lines.push(format!("{:<18} {pass}/{total}", "total"));
        lines
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            match &c.detail {
                _ if c.passed => out.push_str(&format!("pass  {}\n", c.name)),
                Some(d) => out.push_str(&format!("FAIL  {}: {d}\n", c.name)),
                None => out.push_str(&format!("FAIL  {}\n", c.name)),
            }
        }
        out.push('\n');
        for line in self.summary_lines() {
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

/// Deliberate corruptions for exercising the suite itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Doubles every bracket of the Heisenberg entry Bia(II)(1) before it
    /// enters the pipeline. The scaled table is still a Lie algebra, so
    /// only the frozen component tables can notice.
    ScaleHeisenbergBracket,
}

impl Fault {
    pub const ALL: [Fault; 1] = [Fault::ScaleHeisenbergBracket];

    pub fn key(&self) -> &'static str {
        match self {
            Fault::ScaleHeisenbergBracket => "scale-heisenberg-bracket",
        }
    }
}

impl fmt::Display for Fault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for Fault {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Fault::ALL
            .iter()
            .copied()
            .find(|f| f.key() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = Fault::ALL.iter().map(Fault::key).collect();
                format!("unknown fault `{s}`; available: {}", known.join(", "))
            })
    }
}

/// Runs every check, optionally with a fault injected, and returns the
/// results sorted by check name.
pub fn run_all(fault: Option<Fault>) -> VerificationReport {
    let mut checks = Vec::new();
    let rows = build_rows(fault, &mut checks);
    catalog_checks(&mut checks, &rows);
    thurston_checks(&mut checks);
    structure_checks(&mut checks);
    class_checks(&mut checks, &rows);
    f_checks(&mut checks, &rows);
    lee_checks(&mut checks, &rows);
    nabla_checks(&mut checks, &rows);
    curvature_checks(&mut checks, &rows);
    condition_checks(&mut checks, &rows);
    section_checks(&mut checks);
    flat_checks(&mut checks, &rows);
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    VerificationReport { checks }
}

struct Row {
    id: BianchiId,
    analysis: ManifoldAnalysis,
}

fn push(checks: &mut Vec<CheckResult>, name: String, passed: bool, detail: impl FnOnce() -> String) {
    checks.push(CheckResult {
        name,
        passed,
        detail: if passed { None } else { Some(detail()) },
    });
}

fn eq_display<T: PartialEq + fmt::Display>(
    checks: &mut Vec<CheckResult>,
    name: String,
    got: &T,
    want: &T,
) {
    push(checks, name, got == want, || {
        format!("expected {want}, got {got}")
    });
}

fn type_slug(ty: BianchiType) -> String {
    ty.to_string().to_lowercase().replace('_', "-")
}

fn slug(id: &BianchiId) -> String {
    format!("{}-{}", type_slug(id.ty()), id.subtype())
}

fn poly(coeffs: &[i64]) -> Scalar {
    Scalar::from_coeffs_i64(coeffs)
}

fn find<'a>(rows: &'a [Row], ty: BianchiType, subtype: u8) -> Option<&'a Row> {
    rows.iter()
        .find(|r| r.id.ty() == ty && r.id.subtype() == subtype)
}

fn double_brackets(sc: &StructureConstants) -> StructureConstants {
    let two = Scalar::from_int(2);
    let b = |i: usize, j: usize| vec_scale(&two, &sc.bracket(&basis(i), &basis(j)));
    StructureConstants::from_brackets(b(0, 1), b(1, 2), b(2, 0))
}

fn build_rows(fault: Option<Fault>, checks: &mut Vec<CheckResult>) -> Vec<Row> {
    let ids = BianchiId::all_rows();
    push(
        checks,
        "catalog/row-count".to_string(),
        ids.len() == 23,
        || format!("expected 23 rows, found {}", ids.len()),
    );
    let mut rows = Vec::new();
    for id in ids {
        let mut algebra = catalog_algebra(&id);
        if fault == Some(Fault::ScaleHeisenbergBracket)
            && id.ty() == BianchiType::II
            && id.subtype() == 1
        {
            algebra = double_brackets(&algebra);
        }
        let domain = if id.is_symbolic() {
            id.h_domain()
        } else {
            HDomain::All
        };
        match ManifoldAnalysis::analyze(AlgebraSource::Catalog(id.clone()), algebra, domain) {
            Ok(analysis) => rows.push(Row { id, analysis }),
            Err(e) => push(
                checks,
                format!("catalog/pipeline/{}", slug(&id)),
                false,
                || e.to_string(),
            ),
        }
    }
    rows
}

fn catalog_checks(checks: &mut Vec<CheckResult>, rows: &[Row]) {
    for row in rows {
        push(
            checks,
            format!("catalog/jacobi/{}", slug(&row.id)),
            row.analysis.algebra.check_jacobi(),
            || "structure constants violate the Jacobi identity".to_string(),
        );
        push(
            checks,
            format!("connection/koszul/{}", slug(&row.id)),
            check_connection(
                &row.analysis.algebra,
                &row.analysis.structure.g,
                &row.analysis.connection,
            ),
            || "connection is not torsion-free metric-compatible".to_string(),
        );
    }

    let shifted = [
        BianchiType::II,
        BianchiType::III,
        BianchiType::IV,
        BianchiType::V,
        BianchiType::VIh,
        BianchiType::VIIh,
        BianchiType::VIII,
    ];
    for ty in shifted {
        let mut bad = Vec::new();
        for k in 1u8..=3 {
            let next = k % 3 + 1;
            let got = catalog_algebra(&BianchiId::new(ty, k).unwrap()).cyclic_shift();
            let want = catalog_algebra(&BianchiId::new(ty, next).unwrap());
            if got != want {
                bad.push(format!("shift of subtype {k} is not subtype {next}"));
            }
        }
        push(
            checks,
            format!("catalog/cyclic-subtypes/{}", type_slug(ty)),
            bad.is_empty(),
            || bad.join("; "),
        );
    }
    for ty in [BianchiType::I, BianchiType::IX] {
        let sc = catalog_algebra(&BianchiId::new(ty, 1).unwrap());
        push(
            checks,
            format!("catalog/cyclic-fixed/{}", type_slug(ty)),
            sc.cyclic_shift() == sc,
            || "table is not invariant under the cyclic basis change".to_string(),
        );
    }

    let minus_one = Rational::new(-1, 1);
    for k in 1u8..=3 {
        let iii = catalog_algebra(&BianchiId::new(BianchiType::III, k).unwrap());
        let vi = catalog_algebra(&BianchiId::new(BianchiType::VIh, k).unwrap())
            .specialize(&minus_one);
        push(
            checks,
            format!("catalog/iii-equals-vi-at-minus-1/{k}"),
            iii == vi,
            || "type III table differs from the VI family pinned at -1".to_string(),
        );
    }
}

fn geometry_text(g: &Option<ThurstonGeometry>) -> String {
    match g {
        Some(g) => g.to_string(),
        None => "(none)".to_string(),
    }
}

fn thurston_checks(checks: &mut Vec<CheckResult>) {
    use ThurstonGeometry::*;
    let fixed = [
        (BianchiType::I, Some(Euclidean)),
        (BianchiType::II, Some(Nil)),
        (BianchiType::III, Some(HyperbolicPlaneTimesLine)),
        (BianchiType::IV, None),
        (BianchiType::V, Some(Hyperbolic)),
        (BianchiType::VIII, Some(SlTildeTwo)),
        (BianchiType::IX, Some(Sphere)),
    ];
    for (ty, want) in fixed {
        let got = thurston_geometry(&BianchiId::new(ty, 1).unwrap());
        push(
            checks,
            format!("thurston/{}", type_slug(ty)),
            got == want,
            || format!("expected {}, got {}", geometry_text(&want), geometry_text(&got)),
        );
    }

    // The parametric families only carry a geometry once h is pinned to 0.
    let pinned = [
        (BianchiType::VIh, 0i64, Some(Solv)),
        (BianchiType::VIh, -1, None),
        (BianchiType::VIIh, 0, Some(Euclidean)),
        (BianchiType::VIIh, 2, None),
    ];
    for ty in [BianchiType::VIh, BianchiType::VIIh] {
        let mut bad = Vec::new();
        let symbolic = thurston_geometry(&BianchiId::new(ty, 1).unwrap());
        if symbolic.is_some() {
            bad.push(format!(
                "symbolic h should carry no geometry, got {}",
                geometry_text(&symbolic)
            ));
        }
        for (pty, v, want) in &pinned {
            if *pty != ty {
                continue;
            }
            let id = BianchiId::new(ty, 1)
                .unwrap()
                .with_h(Rational::new(*v, 1))
                .unwrap();
            let got = thurston_geometry(&id);
            if got != *want {
                bad.push(format!(
                    "at h = {v}: expected {}, got {}",
                    geometry_text(want),
                    geometry_text(&got)
                ));
            }
        }
        push(
            checks,
            format!("thurston/{}", type_slug(ty)),
            bad.is_empty(),
            || bad.join("; "),
        );
    }

    let mut hits = Vec::new();
    for id in BianchiId::all_rows() {
        if thurston_geometry(&id) == Some(SphereTimesLine) {
            hits.push(id.label());
        }
        if id.ty().is_parametric() {
            for v in [-2i64, -1, 0, 1, 2] {
                let r = Rational::new(v, 1);
                if !id.ty().h_domain().contains_rational(&r) {
                    continue;
                }
                let pinned = id.clone().with_h(r).unwrap();
                if thurston_geometry(&pinned) == Some(SphereTimesLine) {
                    hits.push(pinned.label());
                }
            }
        }
    }
    push(
        checks,
        "thurston/no-sphere-product".to_string(),
        hits.is_empty(),
        || format!("S^2 x R assigned to: {}", hits.join(", ")),
    );
}

fn structure_checks(checks: &mut Vec<CheckResult>) {
    let s = AcbStructure::canonical();
    let failures = s.compatibility_failures();
    push(
        checks,
        "structure/canonical-axioms".to_string(),
        failures.is_empty(),
        || failures.join("; "),
    );

    let tilde = s.associated_metric();
    let want = mat3_from_i64([[0, -1, 0], [-1, 0, 0], [0, 0, 1]]);
    push(
        checks,
        "structure/associated-metric".to_string(),
        tilde == want,
        || "associated metric differs from the frozen table".to_string(),
    );

    let sig_g = signature(&s.g);
    let sig_tilde = signature(&tilde);
    push(
        checks,
        "structure/signature".to_string(),
        sig_g == Some((2, 1, 0)) && sig_tilde == Some((2, 1, 0)),
        || format!("expected (2, 1, 0) twice, got {sig_g:?} and {sig_tilde:?}"),
    );
}

const CLASS_TABLE: [(BianchiType, u8, &str); 23] = [
    (BianchiType::I, 1, "F0"),
    (BianchiType::II, 1, "F4 (+) F10"),
    (BianchiType::II, 2, "F4 (+) F10"),
    (BianchiType::II, 3, "F8 (+) F10"),
    (BianchiType::III, 1, "F5 (+) F10"),
    (BianchiType::III, 2, "F1 (+) F4 (+) F8 (+) F11"),
    (BianchiType::III, 3, "F1 (+) F4 (+) F8 (+) F10 (+) F11"),
    (BianchiType::IV, 1, "F4 (+) F5 (+) F10"),
    (BianchiType::IV, 2, "F1 (+) F4 (+) F10 (+) F11"),
    (BianchiType::IV, 3, "F1 (+) F8 (+) F10 (+) F11"),
    (BianchiType::V, 1, "F9"),
    (BianchiType::V, 2, "F1 (+) F11"),
    (BianchiType::V, 3, "F1 (+) F11"),
    (BianchiType::VIh, 1, "F5 (+) F10; at h = 0: F10"),
    (BianchiType::VIh, 2, "F1 (+) F4 (+) F8 (+) F11; at h = 0: F4 (+) F8"),
    (
        BianchiType::VIh,
        3,
        "F1 (+) F4 (+) F8 (+) F10 (+) F11; at h = 0: F4 (+) F8 (+) F10",
    ),
    (BianchiType::VIIh, 1, "F4 (+) F5; at h = 0: F4"),
    (
        BianchiType::VIIh,
        2,
        "F1 (+) F4 (+) F8 (+) F10 (+) F11; at h = 0: F4 (+) F8 (+) F10",
    ),
    (BianchiType::VIIh, 3, "F1 (+) F4 (+) F8 (+) F11; at h = 0: F4 (+) F8"),
    (BianchiType::VIII, 1, "F4 (+) F8 (+) F10"),
    (BianchiType::VIII, 2, "F8 (+) F10"),
    (BianchiType::VIII, 3, "F8 (+) F10"),
    (BianchiType::IX, 1, "F4 (+) F8 (+) F10"),
];

fn class_checks(checks: &mut Vec<CheckResult>, rows: &[Row]) {
    for (ty, subtype, want) in CLASS_TABLE {
        let Some(row) = find(rows, ty, subtype) else {
            continue;
        };
        let got = row.analysis.class.to_string();
        push(
            checks,
            format!("class/{}", slug(&row.id)),
            got == want,
            || format!("expected {want}, got {got}"),
        );
    }
}

fn f_checks(checks: &mut Vec<CheckResult>, rows: &[Row]) {
    let table: [&[&str]; 3] = [
        &[
            "F_113 = -1/2",
            "F_131 = -1/2",
            "F_223 = 1/2",
            "F_232 = 1/2",
            "F_311 = -1",
            "F_322 = -1",
        ],
        &[
            "F_113 = -1/2",
            "F_131 = -1/2",
            "F_223 = 1/2",
            "F_232 = 1/2",
            "F_311 = 1",
            "F_322 = 1",
        ],
        &[
            "F_113 = 1/2",
            "F_131 = 1/2",
            "F_223 = 1/2",
            "F_232 = 1/2",
            "F_311 = 1",
            "F_322 = 1",
        ],
    ];
    for (k, want) in table.iter().enumerate() {
        let Some(row) = find(rows, BianchiType::II, k as u8 + 1) else {
            continue;
        };
        let got = row.analysis.f.nonzero_components();
        let want: Vec<String> = want.iter().map(|s| s.to_string()).collect();
        push(
            checks,
            format!("f-components/bia-ii/{}", k + 1),
            got == want,
            || format!("expected [{}], got [{}]", want.join(", "), got.join(", ")),
        );
    }
}

fn lee_checks(checks: &mut Vec<CheckResult>, rows: &[Row]) {
    let Some(row) = find(rows, BianchiType::VIh, 1) else {
        return;
    };
    let zero = vec3_zero();
    let mut star = vec3_zero();
    star[2] = poly(&[0, -2]);
    let lee = &row.analysis.lee;
    push(
        checks,
        "lee/bia-vi-h/1".to_string(),
        lee.theta == zero && lee.theta_star == star && lee.omega == zero,
        || "Lee forms differ from the frozen table".to_string(),
    );
}

fn nabla_table_check(
    checks: &mut Vec<CheckResult>,
    name: String,
    row: &Row,
    want: &[[Vec3; DIM]; DIM],
) {
    let mut bad = Vec::new();
    for i in 0..DIM {
        for j in 0..DIM {
            let got = row.analysis.connection.derivative(i, j);
            if got != &want[i][j] {
                bad.push(format!("nabla_e{} e{} differs", i + 1, j + 1));
            }
        }
    }
    push(checks, name, bad.is_empty(), || bad.join("; "));
}

fn nabla_checks(checks: &mut Vec<CheckResult>, rows: &[Row]) {
    let half = |n: i64| Scalar::constant(Rational::new(n, 2));
    let mut want: [[Vec3; DIM]; DIM] = std::array::from_fn(|_| std::array::from_fn(|_| vec3_zero()));
    want[0][1][2] = half(-1);
    want[0][2][1] = half(-1);
    want[1][0][2] = half(-1);
    want[1][2][0] = half(1);
    want[2][0][1] = half(-1);
    want[2][1][0] = half(-1);
    if let Some(row) = find(rows, BianchiType::II, 1) {
        nabla_table_check(checks, "nabla/bia-ii/1".to_string(), row, &want);
    }

    let mut want: [[Vec3; DIM]; DIM] = std::array::from_fn(|_| std::array::from_fn(|_| vec3_zero()));
    want[0][0][2] = Scalar::h();
    want[0][2][0] = poly(&[0, -1]);
    want[1][1][2] = poly(&[0, -1]);
    want[1][2][1] = poly(&[0, -1]);
    want[2][0][1] = Scalar::from_int(-1);
    want[2][1][0] = Scalar::from_int(-1);
    if let Some(row) = find(rows, BianchiType::VIh, 1) {
        nabla_table_check(checks, "nabla/bia-vi-h/1".to_string(), row, &want);
    }
}

/// Independent curvature slots in the order used by the frozen blocks.
const R_SLOTS: [(usize, usize, usize, usize); 6] = [
    (0, 1, 0, 1),
    (0, 1, 0, 2),
    (0, 1, 1, 2),
    (0, 2, 0, 2),
    (0, 2, 1, 2),
    (1, 2, 1, 2),
];

const R_NAMES: [&str; 6] = ["R_1212", "R_1213", "R_1223", "R_1313", "R_1323", "R_2323"];

struct Block {
    ty: BianchiType,
    subtype: u8,
    r: [&'static [i64]; 6],
    rho: [[&'static [i64]; 3]; 3],
    rho_star: [[&'static [i64]; 3]; 3],
    tau: &'static [i64],
    tau_star: &'static [i64],
    norm: &'static [i64],
    sectional: [&'static [i64]; 3],
}

const BLOCKS: [Block; 6] = [
    Block {
        ty: BianchiType::VIh,
        subtype: 1,
        r: [&[0, 0, -1], &[], &[], &[0, 0, 1], &[], &[0, 0, -1]],
        rho: [
            [&[0, 0, -2], &[], &[]],
            [&[], &[0, 0, 2], &[]],
            [&[], &[], &[0, 0, -2]],
        ],
        rho_star: [
            [&[], &[0, 0, -1], &[]],
            [&[0, 0, -1], &[], &[]],
            [&[], &[], &[]],
        ],
        tau: &[0, 0, -6],
        tau_star: &[],
        norm: &[8, 0, -4],
        sectional: [&[0, 0, -1], &[0, 0, -1], &[0, 0, -1]],
    },
    Block {
        ty: BianchiType::VIh,
        subtype: 2,
        r: [&[0, 0, -1], &[], &[], &[0, 0, 1], &[], &[0, 0, -1]],
        rho: [
            [&[0, 0, -2], &[], &[]],
            [&[], &[0, 0, 2], &[]],
            [&[], &[], &[0, 0, -2]],
        ],
        rho_star: [
            [&[], &[0, 0, -1], &[]],
            [&[0, 0, -1], &[], &[]],
            [&[], &[], &[]],
        ],
        tau: &[0, 0, -6],
        tau_star: &[],
        norm: &[2, 0, -10],
        sectional: [&[0, 0, -1], &[0, 0, -1], &[0, 0, -1]],
    },
    Block {
        ty: BianchiType::VIh,
        subtype: 3,
        r: [&[1, 0, 1], &[], &[0, 2], &[1, 0, -1], &[], &[1, 0, 1]],
        rho: [
            [&[0, 0, 2], &[], &[0, -2]],
            [&[], &[-2, 0, -2], &[]],
            [&[0, -2], &[], &[0, 0, 2]],
        ],
        rho_star: [
            [&[], &[1, 0, 1], &[]],
            [&[1, 0, 1], &[], &[0, -2]],
            [&[], &[0, -2], &[]],
        ],
        tau: &[2, 0, 6],
        tau_star: &[],
        norm: &[10, 0, 10],
        sectional: [&[1, 0, 1], &[-1, 0, 1], &[1, 0, 1]],
    },
    Block {
        ty: BianchiType::VIIh,
        subtype: 1,
        r: [&[-1, 0, -1], &[], &[], &[-1, 0, 1], &[0, -2], &[1, 0, -1]],
        rho: [
            [&[0, 0, -2], &[0, 2], &[]],
            [&[0, 2], &[0, 0, 2], &[]],
            [&[], &[], &[2, 0, -2]],
        ],
        rho_star: [
            [&[], &[-1, 0, -1], &[]],
            [&[-1, 0, -1], &[], &[]],
            [&[], &[], &[0, 4]],
        ],
        tau: &[2, 0, -6],
        tau_star: &[0, 4],
        norm: &[4, 0, -4],
        sectional: [&[-1, 0, -1], &[1, 0, -1], &[1, 0, -1]],
    },
    Block {
        ty: BianchiType::VIIh,
        subtype: 2,
        r: [&[1, 0, -1], &[0, 2], &[], &[-1, 0, 1], &[], &[-1, 0, -1]],
        rho: [
            [&[2, 0, -2], &[], &[]],
            [&[], &[0, 0, 2], &[0, -2]],
            [&[], &[0, -2], &[0, 0, -2]],
        ],
        rho_star: [
            [&[], &[1, 0, -1], &[0, 2]],
            [&[1, 0, -1], &[], &[]],
            [&[0, 2], &[], &[]],
        ],
        tau: &[2, 0, -6],
        tau_star: &[],
        norm: &[10, 0, -10],
        sectional: [&[1, 0, -1], &[1, 0, -1], &[-1, 0, -1]],
    },
    Block {
        ty: BianchiType::VIIh,
        subtype: 3,
        r: [&[0, 0, 1], &[], &[], &[0, 0, -1], &[], &[0, 0, 1]],
        rho: [
            [&[0, 0, 2], &[], &[]],
            [&[], &[0, 0, -2], &[]],
            [&[], &[], &[0, 0, 2]],
        ],
        rho_star: [
            [&[], &[0, 0, 1], &[]],
            [&[0, 0, 1], &[], &[]],
            [&[], &[], &[]],
        ],
        tau: &[0, 0, 6],
        tau_star: &[],
        norm: &[2, 0, 10],
        sectional: [&[0, 0, 1], &[0, 0, 1], &[0, 0, 1]],
    },
];

fn curvature_checks(checks: &mut Vec<CheckResult>, rows: &[Row]) {
    for block in &BLOCKS {
        let Some(row) = find(rows, block.ty, block.subtype) else {
            continue;
        };
        let prefix = format!("curvature/{}/{}", type_slug(block.ty), block.subtype);
        let rep = &row.analysis.curvature;

        // The six independent slots together with the symmetry relations
        // pin down the whole tensor.
        let mut bad = Vec::new();
        if !rep.tensor.check_symmetries() {
            bad.push("symmetry relations violated".to_string());
        }
        for (s, (i, j, k, l)) in R_SLOTS.into_iter().enumerate() {
            let want = poly(block.r[s]);
            let got = rep.tensor.component(i, j, k, l);
            if *got != want {
                bad.push(format!("{}: expected {want}, got {got}", R_NAMES[s]));
            }
        }
        push(checks, format!("{prefix}/r"), bad.is_empty(), || {
            bad.join("; ")
        });

        let mut bad = Vec::new();
        for i in 0..DIM {
            for j in 0..DIM {
                let want = poly(block.rho[i][j]);
                if rep.ricci[i][j] != want {
                    bad.push(format!(
                        "rho_{}{}: expected {want}, got {}",
                        i + 1,
                        j + 1,
                        rep.ricci[i][j]
                    ));
                }
            }
        }
        push(checks, format!("{prefix}/rho"), bad.is_empty(), || {
            bad.join("; ")
        });

        let mut bad = Vec::new();
        for i in 0..DIM {
            for j in 0..DIM {
                let want = poly(block.rho_star[i][j]);
                if rep.star_ricci[i][j] != want {
                    bad.push(format!(
                        "rho*_{}{}: expected {want}, got {}",
                        i + 1,
                        j + 1,
                        rep.star_ricci[i][j]
                    ));
                }
            }
        }
        push(checks, format!("{prefix}/rho-star"), bad.is_empty(), || {
            bad.join("; ")
        });

        eq_display(checks, format!("{prefix}/tau"), &rep.tau, &poly(block.tau));
        eq_display(
            checks,
            format!("{prefix}/tau-star"),
            &rep.tau_star,
            &poly(block.tau_star),
        );
        push(
            checks,
            format!(
                "nabla-phi-norm/{}/{}",
                type_slug(block.ty),
                block.subtype
            ),
            rep.nabla_phi_norm == poly(block.norm),
            || {
                format!(
                    "expected {}, got {}",
                    poly(block.norm),
                    rep.nabla_phi_norm
                )
            },
        );

        let labels = ["k(e1,e2)", "k(e1,e3)", "k(e2,e3)"];
        let mut bad = Vec::new();
        for (s, label) in labels.iter().enumerate() {
            let want = poly(block.sectional[s]);
            if rep.k[s] != want {
                bad.push(format!("{label}: expected {want}, got {}", rep.k[s]));
            }
        }
        push(checks, format!("{prefix}/sectional"), bad.is_empty(), || {
            bad.join("; ")
        });
    }
}

fn iff(values: Vec<ExactRoot>) -> ConditionVerdict {
    ConditionVerdict::IffHIn { values }
}

fn eta_want(lambda: &[i64], mu: &[i64], nu: &[i64]) -> Option<[Scalar; 3]> {
    Some([poly(lambda), poly(mu), poly(nu)])
}

fn solution_text(s: &Option<[Scalar; 3]>) -> String {
    match s {
        Some([l, m, n]) => format!("lambda = {l}, mu = {m}, nu = {n}"),
        None => "no solution".to_string(),
    }
}

fn condition_checks(checks: &mut Vec<CheckResult>, rows: &[Row]) {
    let root0 = ExactRoot::from_int(0);
    let root1 = ExactRoot::from_int(1);

    if let Some(row) = find(rows, BianchiType::VIh, 1) {
        let c = &row.analysis.conditions;
        let p = "condition/vi-h/1";
        eq_display(checks, format!("{p}/flat"), &c.flat, &iff(vec![root0.clone()]));
        eq_display(
            checks,
            format!("{p}/isotropic-cosymplectic"),
            &c.isotropic_cosymplectic,
            &iff(vec![
                ExactRoot::surd(Rational::new(2, 1), Sign::Minus).unwrap(),
            ]),
        );
        eq_display(
            checks,
            format!("{p}/star-scalar-flat"),
            &c.star_scalar_flat,
            &ConditionVerdict::Identically,
        );
        eq_display(
            checks,
            format!("{p}/einstein"),
            &c.einstein,
            &ConditionVerdict::Identically,
        );
        let want = eta_want(&[0, 0, -2], &[], &[]);
        push(
            checks,
            format!("{p}/eta-complex-einstein"),
            c.eta_complex_einstein.verdict == ConditionVerdict::Identically
                && c.eta_complex_einstein.solution == want,
            || {
                format!(
                    "expected identically with {}, got {} with {}",
                    solution_text(&want),
                    c.eta_complex_einstein.verdict,
                    solution_text(&c.eta_complex_einstein.solution)
                )
            },
        );
        sign_check(checks, format!("{p}/tau-sign"), row, &row.analysis.curvature.tau, SignVerdict::NonPositive);
        sectional_sign_check(checks, format!("{p}/sectional-sign"), row, SignVerdict::NonPositive);
    }

    if let Some(row) = find(rows, BianchiType::VIh, 2) {
        let c = &row.analysis.conditions;
        let p = "condition/vi-h/2";
        eq_display(checks, format!("{p}/flat"), &c.flat, &iff(vec![root0.clone()]));
        eq_display(
            checks,
            format!("{p}/isotropic-cosymplectic"),
            &c.isotropic_cosymplectic,
            &iff(vec![
                ExactRoot::surd(Rational::new(1, 5), Sign::Minus).unwrap(),
            ]),
        );
        eq_display(
            checks,
            format!("{p}/star-scalar-flat"),
            &c.star_scalar_flat,
            &ConditionVerdict::Identically,
        );
        eq_display(
            checks,
            format!("{p}/einstein"),
            &c.einstein,
            &ConditionVerdict::Identically,
        );
        let want = eta_want(&[0, 0, -2], &[], &[]);
        push(
            checks,
            format!("{p}/eta-complex-einstein"),
            c.eta_complex_einstein.verdict == ConditionVerdict::Identically
                && c.eta_complex_einstein.solution == want,
            || {
                format!(
                    "expected identically with {}, got {} with {}",
                    solution_text(&want),
                    c.eta_complex_einstein.verdict,
                    solution_text(&c.eta_complex_einstein.solution)
                )
            },
        );
        sign_check(checks, format!("{p}/tau-sign"), row, &row.analysis.curvature.tau, SignVerdict::NonPositive);
        sectional_sign_check(checks, format!("{p}/sectional-sign"), row, SignVerdict::NonPositive);
    }

    if let Some(row) = find(rows, BianchiType::VIh, 3) {
        let c = &row.analysis.conditions;
        let p = "condition/vi-h/3";
        eq_display(
            checks,
            format!("{p}/star-scalar-flat"),
            &c.star_scalar_flat,
            &ConditionVerdict::Identically,
        );
        sign_check(
            checks,
            format!("{p}/nabla-phi-norm-sign"),
            row,
            &row.analysis.curvature.nabla_phi_norm,
            SignVerdict::Positive,
        );
        sign_check(checks, format!("{p}/tau-sign"), row, &row.analysis.curvature.tau, SignVerdict::Positive);
        sign_check(
            checks,
            format!("{p}/holomorphic-sectional-sign"),
            row,
            &row.analysis.curvature.k[0],
            SignVerdict::Positive,
        );
    }

    if let Some(row) = find(rows, BianchiType::VIIh, 1) {
        let c = &row.analysis.conditions;
        let p = "condition/vii-h/1";
        eq_display(checks, format!("{p}/flat"), &c.flat, &ConditionVerdict::Never);
        eq_display(
            checks,
            format!("{p}/isotropic-cosymplectic"),
            &c.isotropic_cosymplectic,
            &iff(vec![root1.clone()]),
        );
        eq_display(
            checks,
            format!("{p}/scalar-flat"),
            &c.scalar_flat,
            &iff(vec![
                ExactRoot::surd(Rational::new(1, 3), Sign::Plus).unwrap(),
            ]),
        );
        eq_display(
            checks,
            format!("{p}/star-scalar-flat"),
            &c.star_scalar_flat,
            &iff(vec![root0.clone()]),
        );
        eq_display(
            checks,
            format!("{p}/einstein"),
            &c.einstein,
            &ConditionVerdict::Never,
        );
        let want = eta_want(&[0, 0, -2], &[0, -2], &[2, 2]);
        push(
            checks,
            format!("{p}/eta-complex-einstein"),
            c.eta_complex_einstein.verdict == ConditionVerdict::Identically
                && c.eta_complex_einstein.solution == want,
            || {
                format!(
                    "expected identically with {}, got {} with {}",
                    solution_text(&want),
                    c.eta_complex_einstein.verdict,
                    solution_text(&c.eta_complex_einstein.solution)
                )
            },
        );
        sign_check(
            checks,
            format!("{p}/holomorphic-sectional-sign"),
            row,
            &row.analysis.curvature.k[0],
            SignVerdict::Negative,
        );
        push(
            checks,
            format!("{p}/xi-sectional-equal"),
            row.analysis.curvature.k[1] == row.analysis.curvature.k[2],
            || {
                format!(
                    "k(e1,e3) = {} differs from k(e2,e3) = {}",
                    row.analysis.curvature.k[1], row.analysis.curvature.k[2]
                )
            },
        );
    }

    if let Some(row) = find(rows, BianchiType::VIIh, 2) {
        let c = &row.analysis.conditions;
        let p = "condition/vii-h/2";
        eq_display(checks, format!("{p}/flat"), &c.flat, &ConditionVerdict::Never);
        eq_display(
            checks,
            format!("{p}/isotropic-cosymplectic"),
            &c.isotropic_cosymplectic,
            &iff(vec![root1.clone()]),
        );
        eq_display(
            checks,
            format!("{p}/scalar-flat"),
            &c.scalar_flat,
            &iff(vec![
                ExactRoot::surd(Rational::new(1, 3), Sign::Plus).unwrap(),
            ]),
        );
        eq_display(
            checks,
            format!("{p}/star-scalar-flat"),
            &c.star_scalar_flat,
            &ConditionVerdict::Identically,
        );
        eq_display(
            checks,
            format!("{p}/horizontal-flat"),
            &c.horizontal_flat,
            &iff(vec![root1.clone()]),
        );
        eq_display(
            checks,
            format!("{p}/horizontal-star-ricci-flat"),
            &c.horizontal_star_ricci_flat,
            &iff(vec![root1.clone()]),
        );
        let want_factor = Some(poly(&[-1, 0, 1]));
        push(
            checks,
            format!("{p}/horizontal-proportionality"),
            c.horizontal_proportionality.verdict == ConditionVerdict::Identically
                && c.horizontal_proportionality.factor == want_factor,
            || {
                format!(
                    "expected identically with factor h^2-1, got {} with factor {}",
                    c.horizontal_proportionality.verdict,
                    c.horizontal_proportionality
                        .factor
                        .as_ref()
                        .map(|f| f.to_string())
                        .unwrap_or_else(|| "none".to_string())
                )
            },
        );
        eq_display(
            checks,
            format!("{p}/eta-complex-einstein"),
            &c.eta_complex_einstein.verdict,
            &ConditionVerdict::Never,
        );
    }

    if let Some(row) = find(rows, BianchiType::VIIh, 3) {
        let c = &row.analysis.conditions;
        let p = "condition/vii-h/3";
        eq_display(checks, format!("{p}/flat"), &c.flat, &iff(vec![root0.clone()]));
        eq_display(
            checks,
            format!("{p}/star-scalar-flat"),
            &c.star_scalar_flat,
            &ConditionVerdict::Identically,
        );
        eq_display(
            checks,
            format!("{p}/einstein"),
            &c.einstein,
            &ConditionVerdict::Identically,
        );
        sign_check(
            checks,
            format!("{p}/nabla-phi-norm-sign"),
            row,
            &row.analysis.curvature.nabla_phi_norm,
            SignVerdict::Positive,
        );
        sign_check(checks, format!("{p}/tau-sign"), row, &row.analysis.curvature.tau, SignVerdict::NonNegative);
        sectional_sign_check(checks, format!("{p}/sectional-sign"), row, SignVerdict::NonNegative);
    }
}

fn sign_check(
    checks: &mut Vec<CheckResult>,
    name: String,
    row: &Row,
    quantity: &Scalar,
    want: SignVerdict,
) {
    let got = sign_on_domain(quantity, row.analysis.domain);
    push(checks, name, got == want, || {
        format!("expected {want}, got {got} for {quantity}")
    });
}

fn sectional_sign_check(
    checks: &mut Vec<CheckResult>,
    name: String,
    row: &Row,
    want: SignVerdict,
) {
    let labels = ["k(e1,e2)", "k(e1,e3)", "k(e2,e3)"];
    let mut bad = Vec::new();
    for (s, label) in labels.iter().enumerate() {
        let got = sign_on_domain(&row.analysis.curvature.k[s], row.analysis.domain);
        if got != want {
            bad.push(format!("{label}: expected {want}, got {got}"));
        }
    }
    push(checks, name, bad.is_empty(), || bad.join("; "));
}

fn section_checks(checks: &mut Vec<CheckResult>) {
    let s = AcbStructure::canonical();

    let got = section_kinds(&s, &basis(0), &basis(1)).unwrap();
    let want: BTreeSet<SectionKind> = [SectionKind::PhiHolomorphic].into();
    push(
        checks,
        "section/phi-holomorphic-basis".to_string(),
        got == want,
        || format!("expected {want:?}, got {got:?}"),
    );

    let want: BTreeSet<SectionKind> = [SectionKind::TotallyReal, SectionKind::XiSection].into();
    let first = section_kinds(&s, &basis(0), &basis(2)).unwrap();
    let second = section_kinds(&s, &basis(1), &basis(2)).unwrap();
    push(
        checks,
        "section/xi-basis".to_string(),
        first == want && second == want,
        || format!("expected {want:?}, got {first:?} and {second:?}"),
    );
}

fn flat_checks(checks: &mut Vec<CheckResult>, rows: &[Row]) {
    let Some(row) = find(rows, BianchiType::I, 1) else {
        return;
    };
    let a = &row.analysis;
    push(
        checks,
        "flat/cosymplectic-class-zero".to_string(),
        a.class.is_cosymplectic()
            && a.f.is_zero()
            && a.curvature.tensor.is_zero()
            && a.curvature.tau.is_zero()
            && a.curvature.nabla_phi_norm.is_zero(),
        || "the abelian entry is not flat cosymplectic".to_string(),
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_run_passes_everything() {
        let report = run_all(None);
        assert!(report.checks.len() > 150, "suite lost checks: {}", report.checks.len());
        let failures: Vec<String> = report
            .failures()
            .iter()
            .map(|c| format!("{}: {}", c.name, c.detail.clone().unwrap_or_default()))
            .collect();
        assert!(report.passed(), "failures:\n{}", failures.join("\n"));
    }

    #[test]
    fn checks_are_sorted_and_named_uniquely() {
        let report = run_all(None);
        let names: Vec<&String> = report.checks.iter().map(|c| &c.name).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(names, sorted);
    }

    #[test]
    fn scaled_bracket_is_caught_by_frozen_tables() {
        let report = run_all(Some(Fault::ScaleHeisenbergBracket));
        assert!(!report.passed());
        let failed: Vec<&str> = report.failures().iter().map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"f-components/bia-ii/1"), "failed: {failed:?}");
        assert!(failed.contains(&"nabla/bia-ii/1"), "failed: {failed:?}");
        // The corruption preserves the Jacobi identity and the class, so
        // those checks still pass.
        assert!(!failed.contains(&"catalog/jacobi/ii-1"));
        assert!(!failed.contains(&"class/ii-1"));
    }

    #[test]
    fn summary_counts_per_group() {
        let report = run_all(None);
        let lines = report.summary_lines();
        let total = lines.last().unwrap();
        assert!(total.starts_with("total"));
        assert!(lines.iter().any(|l| l.starts_with("curvature")));
        let groups: Vec<&str> = lines
            .iter()
            .map(|l| l.split_whitespace().next().unwrap())
            .collect();
        let mut sorted = groups.clone();
        sorted.sort();
        assert_eq!(groups, sorted);
    }

    #[test]
    fn fault_keys_round_trip() {
        for fault in Fault::ALL {
            assert_eq!(fault.key().parse::<Fault>(), Ok(fault));
        }
        assert!("no-such-fault".parse::<Fault>().is_err());
    }

    #[test]
    fn report_serialization_round_trips() {
        let report = run_all(Some(Fault::ScaleHeisenbergBracket));
        let json = serde_json::to_string(&report).unwrap();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(report, back);
    }
}
