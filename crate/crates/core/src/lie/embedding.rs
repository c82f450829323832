use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::group::GroupType;
use crate::error::{Error, Result};

/// A catalogued conjugacy class of inclusions `subgroup -> ambient`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedEmbedding {
    pub id: String,
    pub ambient: GroupType,
    pub subgroup: GroupType,
    /// Rank of the induced map on rational homotopy per degree, or `None`
    /// when the catalog does not declare it.
    pub homotopy_map_ranks: Option<BTreeMap<u32, u32>>,
    pub tags: BTreeSet<String>,
}

/// How a catalog record declares its homotopy map ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankDeclaration {
    Undeclared,
    /// Every subgroup generator maps injectively.
    Injective,
    /// Rank `min(c_L(k), c_G(k))` in every degree.
    Generic,
    Explicit(BTreeMap<u32, u32>),
}

pub(crate) fn multiplicities(degrees: &[u32]) -> BTreeMap<u32, u32> {
    let mut m = BTreeMap::new();
    for &d in degrees {
        *m.entry(d).or_insert(0) += 1;
    }
    m
}

impl NamedEmbedding {
    /// Build and check the dimension, rank and per-degree bounds.
    pub fn new(
        id: impl Into<String>,
        ambient: GroupType,
        subgroup: GroupType,
        ranks: RankDeclaration,
        tags: impl IntoIterator<Item = String>,
    ) -> Result<Self> {
        let id = id.into();
        if subgroup.dimension() > ambient.dimension() || subgroup.rank() > ambient.rank() {
            return Err(Error::embedding(
                &id,
                format!("{subgroup} does not fit inside {ambient}"),
            ));
        }
        let cl = multiplicities(&subgroup.degrees());
        let cg = multiplicities(&ambient.degrees());
        let homotopy_map_ranks = match ranks {
            RankDeclaration::Undeclared => None,
            RankDeclaration::Injective => {
                for (&k, &c) in &cl {
                    if cg.get(&k).copied().unwrap_or(0) < c {
                        return Err(Error::embedding(
                            &id,
                            format!("declared injective but degree {k} has no room in {ambient}"),
                        ));
                    }
                }
                Some(cl.clone())
            }
            RankDeclaration::Generic => Some(
                cl.iter()
                    .map(|(&k, &c)| (k, c.min(cg.get(&k).copied().unwrap_or(0))))
                    .collect(),
            ),
            RankDeclaration::Explicit(map) => Some(map),
        };
        let emb = NamedEmbedding {
            id,
            ambient,
            subgroup,
            homotopy_map_ranks,
            tags: tags.into_iter().collect(),
        };
        emb.check_rank_bounds()?;
        Ok(emb)
    }

    /// Every declared rank is bounded by both multiplicities.
    pub fn check_rank_bounds(&self) -> Result<()> {
        let Some(ranks) = &self.homotopy_map_ranks else {
            return Ok(());
        };
        let cl = multiplicities(&self.subgroup.degrees());
        let cg = multiplicities(&self.ambient.degrees());
        for (&k, &r) in ranks {
            let bound = cl
                .get(&k)
                .copied()
                .unwrap_or(0)
                .min(cg.get(&k).copied().unwrap_or(0));
            if r > bound {
                return Err(Error::embedding(
                    &self.id,
                    format!("rank {r} in degree {k} exceeds bound {bound}"),
                ));
            }
        }
        Ok(())
    }

    /// Declared rank in degree `k`, if the map is declared at all.
    pub fn declared_rank(&self, k: u32) -> Option<u32> {
        self.homotopy_map_ranks
            .as_ref()
            .map(|m| m.get(&k).copied().unwrap_or(0))
    }

    /// True when every subgroup generator is declared to map injectively.
    pub fn is_declared_injective(&self) -> bool {
        let Some(ranks) = &self.homotopy_map_ranks else {
            return false;
        };
        multiplicities(&self.subgroup.degrees())
            .iter()
            .all(|(k, c)| ranks.get(k) == Some(c))
    }

    /// Ineffective kernel carried as a `kernel=<group>` tag.
    pub fn kernel(&self) -> Option<GroupType> {
        self.tags
            .iter()
            .find_map(|t| t.strip_prefix("kernel="))
            .and_then(|s| s.parse().ok())
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.contains(tag)
    }

    /// Family name of a parameterized id: `su-block[m=3]` gives `su-block`.
    pub fn family(&self) -> &str {
        self.id.split('[').next().unwrap_or(&self.id)
    }
}
