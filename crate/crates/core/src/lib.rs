//! Exact classification and curvature engine for almost contact B-metric
//! structures on three-dimensional Lie algebras.
//!
//! Every three-dimensional real Lie algebra falls into one of the Bianchi
//! types. Equipping the underlying Lie group with a left-invariant almost
//! contact B-metric structure `(phi, xi, eta, g)` turns each algebra into a
//! manifold whose class in the basic-classes decomposition
//! (`F1 ... F11`), Levi-Civita connection, curvature and characteristic
//! curvature conditions can all be computed in closed form. This crate does
//! exactly that, entirely in exact arithmetic: scalars are polynomials in
//! the family parameter `h` with arbitrary-precision rational coefficients,
//! so every identity is checked with tolerance zero.
//!
//! The pipeline is:
//!
//! 1. [`lie_algebra`]: the catalog of Bianchi types and subtypes (structure
//!    constants), the Lie bracket, the Jacobi test and the Thurston
//!    geometry lookup.
//! 2. [`acb_structure`]: the canonical almost contact B-metric structure,
//!    its compatibility axioms and the associated metric.
//! 3. [`connection`]: the Levi-Civita connection from the Koszul formula.
//! 4. [`f_tensor`]: the fundamental tensor `F`, Lee forms, the decomposition
//!    into basic-class parameters and the classification itself.
//! 5. [`curvature`]: curvature, Ricci and scalar curvatures, sectional
//!    curvatures, and the named curvature conditions (flatness, Einstein,
//!    isotropic-cosymplectic and friends) resolved exactly in `h`.
//!
//! [`report`] drives the full pipeline and renders text or JSON;
//! [`verify`] re-derives the complete table of published classification and
//! curvature results and checks them; [`cli`] exposes everything as the
//! `acbm3` command-line tool.
//!
//! The `examples/` directory is the guided tour; each example runs with
//! `cargo run --example <name>`:
//!
//! * `catalog_tour`: every catalog row with brackets, geometry and class.
//! * `classify_pipeline`: the full pipeline on one algebra, stage by stage.
//! * `curvature_report`: curvature data and conditions for a family.
//! * `exact_scalars`: the scalar ring, evaluation and exact roots.
//! * `special_h_values`: curvature conditions at exceptional h values.
//! * `section_kinds`: special 2-planes and their sectional curvatures.
//! * `custom_algebra`: classifying a user-supplied bracket table from JSON.
//! * `verify_all`: the complete verification suite, programmatically.

#![forbid(unsafe_code)]

pub mod acb_structure;
pub mod cli;
pub mod connection;
pub mod curvature;
pub mod f_tensor;
pub mod lie_algebra;
pub mod matrix;
pub mod report;
pub mod scalar;
pub mod verify;
