use std::fmt;

use serde::Serialize;

use super::seven::SevenFamilyParams;

/// Which family of cohomogeneity-one rational spheres a diagram belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum ClassificationOutcome {
    LinearSphere {
        description: String,
    },
    Brieskorn {
        m: u32,
        d: u32,
    },
    Wu,
    /// `G2/SU(2)` with the given Dynkin index of `SU(2)`.
    G2modSU2 {
        index: u8,
    },
    SevenFamily {
        params: SevenFamilyParams,
        r: u128,
    },
    NotRationalSphere {
        reason: String,
    },
    Unmatched,
}

impl ClassificationOutcome {
    pub fn is_rational_sphere(&self) -> bool {
        !matches!(
            self,
            ClassificationOutcome::NotRationalSphere { .. } | ClassificationOutcome::Unmatched
        )
    }
}

impl fmt::Display for ClassificationOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassificationOutcome::LinearSphere { description } => {
                write!(f, "linear sphere ({description})")
            }
            ClassificationOutcome::Brieskorn { m, d } => {
                write!(f, "Brieskorn variety B^{}_{d}", 2 * m - 1)
            }
            ClassificationOutcome::Wu => f.write_str("Wu manifold SU(3)/SO(3)"),
            ClassificationOutcome::G2modSU2 { index } => write!(f, "G2/SU(2)_{index}"),
            ClassificationOutcome::SevenFamily { params, r } => write!(
                f,
                "7-manifold with (p-, q-, p+, q+) = ({}, {}, {}, {}), r = {r}",
                params.p_minus, params.q_minus, params.p_plus, params.q_plus
            ),
            ClassificationOutcome::NotRationalSphere { reason } => {
                write!(f, "not a rational sphere: {reason}")
            }
            ClassificationOutcome::Unmatched => f.write_str("unmatched"),
        }
    }
}
