//! Reproduction of the corank-two tables, the seven-manifold family and the
//! matching of diagrams against the known families of rational spheres.

mod classify;
mod outcome;
mod seven;
mod tables;

pub use classify::classify_diagram;
pub use outcome::ClassificationOutcome;
pub use seven::{realize_torsion, seven_family_torsion, SevenFamilyParams};
pub use tables::{
    case6_pairs, compare_keys, enumerate_corank2, table2_reference, table3_filter,
    table3_reference, Case6Pair, CorankTwoRow, ReferenceRow, RowKey,
};
