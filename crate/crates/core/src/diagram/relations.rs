use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::Serialize;

use super::{GroupDiagram, Orbit, ValidatedDiagram};
use crate::error::{Error, Result};
use crate::homotopy::euler_characteristic;
use crate::lie::{Containments, NamedEmbedding};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Equivalence {
    Equal,
    SwapEqual,
    /// Not equal at the granularity of catalog ids; finer conjugation moves
    /// are not decided.
    DistinctAtDescriptorLevel,
}

fn descriptor(d: &GroupDiagram) -> impl PartialEq + '_ {
    (
        [
            &d.h.id,
            &d.k_minus.id,
            &d.k_plus.id,
            &d.fiber_minus.id,
            &d.fiber_plus.id,
        ],
        d.components,
        d.nonorientable,
    )
}

pub fn equivalent(d1: &ValidatedDiagram, d2: &ValidatedDiagram) -> Result<Equivalence> {
    if d1.group != d2.group {
        return Err(Error::Incomparable(format!("{} vs {}", d1.group, d2.group)));
    }
    if descriptor(d1) == descriptor(d2) {
        return Ok(Equivalence::Equal);
    }
    let swapped = d2.diagram.swapped();
    if descriptor(d1) == descriptor(&swapped) {
        return Ok(Equivalence::SwapEqual);
    }
    Ok(Equivalence::DistinctAtDescriptorLevel)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleDiskEuler {
    #[serde(serialize_with = "decimal")]
    pub chi_minus: BigUint,
    #[serde(serialize_with = "decimal")]
    pub chi_plus: BigUint,
    #[serde(serialize_with = "decimal")]
    pub chi_principal: BigUint,
    /// `χ(G/K⁻) + χ(G/K⁺) - χ(G/H)`.
    #[serde(serialize_with = "decimal")]
    pub value: BigInt,
    pub manifold_dim: i64,
    /// Whether `value` equals `χ(S^n) = 1 + (-1)^n`.
    pub consistent: bool,
}

/// Big integers as decimal strings, so JSON consumers never lose precision.
fn decimal<S: serde::Serializer, T: std::fmt::Display>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn orbit_euler(d: &GroupDiagram, orbit: Orbit) -> Result<BigUint> {
    let chi = euler_characteristic(&d.orbit_model(orbit))?;
    let comps = BigUint::from(d.component_count(orbit));
    if !(&chi % &comps).is_zero() {
        return Err(Error::embedding(
            &d.embedding(orbit).id,
            format!("χ = {chi} is not divisible by the component count {comps}"),
        ));
    }
    Ok(chi / comps)
}

pub fn double_disk_euler(d: &ValidatedDiagram) -> Result<DoubleDiskEuler> {
    let chi_minus = orbit_euler(d, Orbit::Minus)?;
    let chi_plus = orbit_euler(d, Orbit::Plus)?;
    let chi_principal = orbit_euler(d, Orbit::Principal)?;
    let value = BigInt::from(chi_minus.clone()) + BigInt::from(chi_plus.clone())
        - BigInt::from(chi_principal.clone());
    let n = d.manifold_dim();
    let sphere = if n % 2 == 0 { 2 } else { 0 };
    Ok(DoubleDiskEuler {
        consistent: value == BigInt::from(sphere),
        chi_minus,
        chi_plus,
        chi_principal,
        value,
        manifold_dim: n,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Primitivity {
    PrimitiveRequired,
    NonPrimitive { witness: String },
    Unknown,
}

/// Look for a proper subgroup `L` in `lattice` containing both `K⁻` and
/// `K⁺` (and so `H`). Containment is by declared catalog relations.
pub fn primitivity(
    d: &ValidatedDiagram,
    lattice: &[NamedEmbedding],
    containments: &Containments,
    rational_sphere: bool,
) -> Result<Primitivity> {
    for l in lattice {
        if l.ambient != d.group {
            return Err(Error::InvalidLattice {
                id: l.id.clone(),
                reason: format!("embeds into {}, not {}", l.ambient, d.group),
            });
        }
        if l.subgroup.dimension() >= d.group.dimension() {
            return Err(Error::InvalidLattice {
                id: l.id.clone(),
                reason: "not a proper subgroup".into(),
            });
        }
    }
    for l in lattice {
        if containments.contains(&l.id, &d.k_minus.id) && containments.contains(&l.id, &d.k_plus.id)
        {
            return Ok(Primitivity::NonPrimitive {
                witness: l.id.clone(),
            });
        }
    }
    let full = |e: &NamedEmbedding| e.subgroup.dimension() == d.group.dimension();
    if full(&d.k_minus) || full(&d.k_plus) || rational_sphere {
        return Ok(Primitivity::PrimitiveRequired);
    }
    Ok(Primitivity::Unknown)
}
