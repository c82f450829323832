use serde::{Deserialize, Serialize};

use super::{ComponentCounts, NonorientableFlags};
use crate::homotopy::odd_product_poincare;
use crate::polynomial::IntegerPolynomial;

pub const DIAGRAM_SCHEMA: u32 = 1;

fn schema_default() -> u32 {
    DIAGRAM_SCHEMA
}

fn yes() -> bool {
    true
}

/// Serialized form of a diagram: groups are named by catalog embedding ids.
/// The same schema is used in the catalog file (TOML) and on the command
/// line (JSON).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramDocument {
    #[serde(default = "schema_default")]
    pub schema: u32,
    pub name: String,
    #[serde(rename = "G")]
    pub group: String,
    #[serde(rename = "H")]
    pub h: String,
    #[serde(rename = "K_minus")]
    pub k_minus: String,
    #[serde(rename = "K_plus")]
    pub k_plus: String,
    pub fiber_minus: String,
    pub fiber_plus: String,
    #[serde(default)]
    pub components: ComponentCounts,
    #[serde(default)]
    pub nonorientable: NonorientableFlags,
    #[serde(default = "yes")]
    pub h_projections_proper: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti: Option<BettiDocument>,
}

/// Declared rational Betti data of the orbits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BettiDocument {
    #[serde(rename = "H")]
    pub h: PoincareSpec,
    #[serde(rename = "K_minus")]
    pub k_minus: PoincareSpec,
    #[serde(rename = "K_plus")]
    pub k_plus: PoincareSpec,
}

/// A Poincaré polynomial, either as sphere dimensions of a rational product
/// of spheres or as explicit coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PoincareSpec {
    Spheres { spheres: Vec<u32> },
    Coefficients { coefficients: Vec<i64> },
}

impl PoincareSpec {
    pub fn polynomial(&self) -> IntegerPolynomial {
        match self {
            PoincareSpec::Spheres { spheres } => odd_product_poincare(spheres),
            PoincareSpec::Coefficients { coefficients } => {
                IntegerPolynomial::new(coefficients.clone())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_defaults() {
        let doc: DiagramDocument = serde_json::from_str(
            r#"{"name":"x","G":"SU(3)","H":"a","K_minus":"b","K_plus":"c",
                "fiber_minus":"f","fiber_plus":"g",
                "betti":{"H":{"spheres":[3]},"K_minus":{"coefficients":[1,0,1]},"K_plus":{"spheres":[]}}}"#,
        )
        .unwrap();
        assert_eq!(doc.schema, DIAGRAM_SCHEMA);
        assert_eq!(doc.components, ComponentCounts::default());
        assert!(doc.h_projections_proper);
        let b = doc.betti.unwrap();
        assert_eq!(b.h.polynomial().coefficients(), &[1, 0, 0, 1]);
        assert_eq!(b.k_minus.polynomial().coefficients(), &[1, 0, 1]);
        let bad = serde_json::from_str::<DiagramDocument>(r#"{"name":"x","bogus":1}"#);
        assert!(bad.is_err());
    }
}
