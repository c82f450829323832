//! Computable core of the classification of cohomogeneity-one actions on
//! rational homology spheres.
//!
//! The crate is organised bottom-up: [`lie`] holds group types, the
//! transitive-sphere table and named embeddings; [`homotopy`] does the
//! long-exact-sequence and Hilbert-series arithmetic; [`diagram`] models
//! group diagrams and their consistency checks; [`brieskorn`] computes the
//! homology of Brieskorn varieties; [`classification`] reproduces the corank-2
//! tables and matches diagrams against the known families. [`catalog`] loads
//! the shipped embedding/diagram data and [`verify`] cross-checks all of it.

pub mod brieskorn;
pub mod catalog;
pub mod classification;
pub mod diagram;
pub mod error;
pub mod homotopy;
pub mod lie;
pub mod polynomial;
pub mod template;
pub mod verify;

pub use catalog::Catalog;
pub use error::{Error, Result};
pub use polynomial::IntegerPolynomial;

/// Names of the public operations, for front ends that must expose each one.
pub const OPERATIONS: [&str; 26] = [
    "canonicalize",
    "degrees",
    "weyl_order",
    "transitive_sphere_pairs",
    "sphere_quotient",
    "spheres_acted_on",
    "quotient_homotopy",
    "hilbert_series",
    "euler_characteristic",
    "odd_product_poincare",
    "validate",
    "gh_classify",
    "primitivity",
    "equivalent",
    "double_disk_euler",
    "mv_feasible",
    "delta_poly",
    "delta_at_one",
    "homology",
    "enumerate_corank2",
    "table3_filter",
    "seven_family_torsion",
    "realize_torsion",
    "case6_pairs",
    "classify_diagram",
    "verify_tables",
];
