//! Group diagrams `H ⊆ K± ⊆ G` and the checks run on them.

mod document;
pub mod gh;
pub mod mv;
mod relations;
mod validate;

pub use document::{BettiDocument, DiagramDocument, PoincareSpec, DIAGRAM_SCHEMA};
pub use gh::{gh_classify, Case6Fiber, GhCaseResult};
pub use mv::{mv_feasible, MvFeasibility, RankTriple, Verdict};
pub use relations::{
    double_disk_euler, equivalent, primitivity, DoubleDiskEuler, Equivalence, Primitivity,
};
pub use validate::{validate, ValidatedDiagram, Violation};

use serde::{Deserialize, Serialize};

use crate::homotopy::HomogeneousSpaceModel;
use crate::lie::{GroupType, NamedEmbedding};
use crate::polynomial::IntegerPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentCounts {
    #[serde(rename = "H", default = "one")]
    pub h: u32,
    #[serde(rename = "K_minus", default = "one")]
    pub k_minus: u32,
    #[serde(rename = "K_plus", default = "one")]
    pub k_plus: u32,
}

fn one() -> u32 {
    1
}

impl Default for ComponentCounts {
    fn default() -> Self {
        ComponentCounts {
            h: 1,
            k_minus: 1,
            k_plus: 1,
        }
    }
}

/// Which singular orbits `G/K±` are non-orientable.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NonorientableFlags {
    #[serde(rename = "K_minus", default, deserialize_with = "flag")]
    pub k_minus: bool,
    #[serde(rename = "K_plus", default, deserialize_with = "flag")]
    pub k_plus: bool,
}

/// Accepts `true`/`false` or `1`/`0` (templated catalog entries produce
/// integers).
fn flag<'de, D: serde::Deserializer<'de>>(d: D) -> Result<bool, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Flag {
        Bool(bool),
        Int(i64),
    }
    match Flag::deserialize(d)? {
        Flag::Bool(b) => Ok(b),
        Flag::Int(0) => Ok(false),
        Flag::Int(1) => Ok(true),
        Flag::Int(i) => Err(serde::de::Error::custom(format!(
            "expected 0 or 1, got {i}"
        ))),
    }
}

/// Rational Poincaré polynomials of the three orbits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitBetti {
    #[serde(rename = "H")]
    pub h: IntegerPolynomial,
    #[serde(rename = "K_minus")]
    pub k_minus: IntegerPolynomial,
    #[serde(rename = "K_plus")]
    pub k_plus: IntegerPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupDiagram {
    pub name: String,
    #[serde(rename = "G")]
    pub group: GroupType,
    #[serde(rename = "H")]
    pub h: NamedEmbedding,
    #[serde(rename = "K_minus")]
    pub k_minus: NamedEmbedding,
    #[serde(rename = "K_plus")]
    pub k_plus: NamedEmbedding,
    /// `H ⊆ K⁻` as an embedding into `K⁻`.
    pub fiber_minus: NamedEmbedding,
    /// `H ⊆ K⁺` as an embedding into `K⁺`.
    pub fiber_plus: NamedEmbedding,
    pub components: ComponentCounts,
    pub nonorientable: NonorientableFlags,
    /// Declared: the projection of `H` to every simple factor of `G` is proper.
    pub h_projections_proper: bool,
    pub betti: Option<OrbitBetti>,
}

/// One of the three orbit types of a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orbit {
    Principal,
    Minus,
    Plus,
}

impl GroupDiagram {
    pub fn ell_minus(&self) -> i64 {
        self.k_minus.subgroup.dimension() as i64 - self.h.subgroup.dimension() as i64
    }

    pub fn ell_plus(&self) -> i64 {
        self.k_plus.subgroup.dimension() as i64 - self.h.subgroup.dimension() as i64
    }

    /// Dimension of the cohomogeneity-one manifold, `dim G/H + 1`.
    pub fn manifold_dim(&self) -> i64 {
        self.group.dimension() as i64 - self.h.subgroup.dimension() as i64 + 1
    }

    /// Number of non-orientable singular orbits.
    pub fn nonorientable_count(&self) -> u8 {
        self.nonorientable.k_minus as u8 + self.nonorientable.k_plus as u8
    }

    /// Exchange the roles of `K⁻` and `K⁺`.
    pub fn swapped(&self) -> GroupDiagram {
        let mut d = self.clone();
        std::mem::swap(&mut d.k_minus, &mut d.k_plus);
        std::mem::swap(&mut d.fiber_minus, &mut d.fiber_plus);
        std::mem::swap(&mut d.components.k_minus, &mut d.components.k_plus);
        std::mem::swap(&mut d.nonorientable.k_minus, &mut d.nonorientable.k_plus);
        if let Some(b) = d.betti.as_mut() {
            std::mem::swap(&mut b.k_minus, &mut b.k_plus);
        }
        d
    }

    pub fn embedding(&self, orbit: Orbit) -> &NamedEmbedding {
        match orbit {
            Orbit::Principal => &self.h,
            Orbit::Minus => &self.k_minus,
            Orbit::Plus => &self.k_plus,
        }
    }

    pub fn component_count(&self, orbit: Orbit) -> u32 {
        match orbit {
            Orbit::Principal => self.components.h,
            Orbit::Minus => self.components.k_minus,
            Orbit::Plus => self.components.k_plus,
        }
    }

    pub fn orbit_model(&self, orbit: Orbit) -> HomogeneousSpaceModel {
        HomogeneousSpaceModel::new(self.embedding(orbit).clone())
    }
}
