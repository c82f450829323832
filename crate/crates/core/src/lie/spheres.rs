use std::collections::BTreeSet;

use serde::Serialize;

use super::embedding::NamedEmbedding;
use super::group::{Family, GroupType};
use crate::error::{Error, Result};

/// One of the nine families of effective transitive actions on spheres.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SphereRowFamily {
    SpecialOrthogonal,
    SpecialUnitary,
    Unitary,
    Symplectic,
    SymplecticCircle,
    SymplecticSp1,
    G2,
    Spin7,
    Spin9,
}

/// A concrete row `group / isotropy = S^sphere_dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SphereActionRow {
    pub family: SphereRowFamily,
    pub m: Option<u32>,
    pub group: GroupType,
    pub isotropy: GroupType,
    pub sphere_dim: u32,
}

impl SphereRowFamily {
    pub const ALL: [SphereRowFamily; 9] = [
        SphereRowFamily::SpecialOrthogonal,
        SphereRowFamily::SpecialUnitary,
        SphereRowFamily::Unitary,
        SphereRowFamily::Symplectic,
        SphereRowFamily::SymplecticCircle,
        SphereRowFamily::SymplecticSp1,
        SphereRowFamily::G2,
        SphereRowFamily::Spin7,
        SphereRowFamily::Spin9,
    ];

    /// Human-readable pattern, e.g. `SU(m)/SU(m-1) = S^(2m-1)`.
    pub fn pattern(self) -> &'static str {
        match self {
            SphereRowFamily::SpecialOrthogonal => "SO(m)/SO(m-1) = S^(m-1)",
            SphereRowFamily::SpecialUnitary => "SU(m)/SU(m-1) = S^(2m-1)",
            SphereRowFamily::Unitary => "SU(m)xS^1/SU(m-1)xS^1 = S^(2m-1)",
            SphereRowFamily::Symplectic => "Sp(m)/Sp(m-1) = S^(4m-1)",
            SphereRowFamily::SymplecticCircle => "Sp(m)xS^1/Sp(m-1)xS^1 = S^(4m-1)",
            SphereRowFamily::SymplecticSp1 => "Sp(m)xSp(1)/Sp(m-1)xSp(1) = S^(4m-1)",
            SphereRowFamily::G2 => "G2/SU(3) = S^6",
            SphereRowFamily::Spin7 => "Spin(7)/G2 = S^7",
            SphereRowFamily::Spin9 => "Spin(9)/Spin(7) = S^15",
        }
    }

    /// Smallest admissible parameter, `None` for the three isolated rows.
    pub fn min_m(self) -> Option<u32> {
        match self {
            SphereRowFamily::SpecialOrthogonal
            | SphereRowFamily::SpecialUnitary
            | SphereRowFamily::Unitary => Some(2),
            SphereRowFamily::Symplectic
            | SphereRowFamily::SymplecticCircle
            | SphereRowFamily::SymplecticSp1 => Some(1),
            _ => None,
        }
    }

    /// Sphere dimension as printed in the table, independent of group data.
    pub fn tabulated_dim(self, m: u32) -> u32 {
        match self {
            SphereRowFamily::SpecialOrthogonal => m - 1,
            SphereRowFamily::SpecialUnitary | SphereRowFamily::Unitary => 2 * m - 1,
            SphereRowFamily::Symplectic
            | SphereRowFamily::SymplecticCircle
            | SphereRowFamily::SymplecticSp1 => 4 * m - 1,
            SphereRowFamily::G2 => 6,
            SphereRowFamily::Spin7 => 7,
            SphereRowFamily::Spin9 => 15,
        }
    }

    /// The row at parameter `m` (ignored for isolated rows); `None` below the
    /// admissible range.
    pub fn instantiate(self, m: u32) -> Option<SphereActionRow> {
        let circle = GroupType::torus(1);
        let sp1 = GroupType::sp(1);
        if let Some(min) = self.min_m() {
            if m < min {
                return None;
            }
        }
        let (group, isotropy) = match self {
            SphereRowFamily::SpecialOrthogonal => (GroupType::so(m), GroupType::so(m - 1)),
            SphereRowFamily::SpecialUnitary => (GroupType::su(m), GroupType::su(m - 1)),
            SphereRowFamily::Unitary => (
                GroupType::su(m).times(&circle),
                GroupType::su(m - 1).times(&circle),
            ),
            SphereRowFamily::Symplectic => (GroupType::sp(m), GroupType::sp(m - 1)),
            SphereRowFamily::SymplecticCircle => (
                GroupType::sp(m).times(&circle),
                GroupType::sp(m - 1).times(&circle),
            ),
            SphereRowFamily::SymplecticSp1 => (
                GroupType::sp(m).times(&sp1),
                GroupType::sp(m - 1).times(&sp1),
            ),
            SphereRowFamily::G2 => (GroupType::exceptional(Family::G2), GroupType::su(3)),
            SphereRowFamily::Spin7 => (GroupType::spin(7), GroupType::exceptional(Family::G2)),
            SphereRowFamily::Spin9 => (GroupType::spin(9), GroupType::spin(7)),
        };
        Some(SphereActionRow {
            family: self,
            m: self.min_m().map(|_| m),
            group,
            isotropy,
            sphere_dim: self.tabulated_dim(m),
        })
    }

    /// All rows whose group has dimension at most `max_dim`.
    fn rows_up_to_dim(self, max_dim: u32) -> Vec<SphereActionRow> {
        match self.min_m() {
            None => self
                .instantiate(0)
                .into_iter()
                .filter(|r| r.group.dimension() <= max_dim)
                .collect(),
            Some(min) => (min..)
                .map_while(|m| {
                    self.instantiate(m)
                        .filter(|r| r.group.dimension() <= max_dim)
                })
                .collect(),
        }
    }
}

/// The nine row families of transitive sphere actions.
pub fn transitive_sphere_pairs() -> [SphereRowFamily; 9] {
    SphereRowFamily::ALL
}

/// Every row with parameter `m <= max_m`, isolated rows included once.
pub fn sphere_rows(max_m: u32) -> Vec<SphereActionRow> {
    let mut out = Vec::new();
    for fam in SphereRowFamily::ALL {
        match fam.min_m() {
            None => out.extend(fam.instantiate(0)),
            Some(min) => out.extend((min..=max_m).filter_map(|m| fam.instantiate(m))),
        }
    }
    out
}

/// Sphere dimension of `group / isotropy` if the pair of local types matches a
/// row of the table.
pub fn match_sphere_row(group: &GroupType, isotropy: &GroupType) -> Option<u32> {
    SphereRowFamily::ALL.iter().find_map(|fam| {
        fam.rows_up_to_dim(group.dimension())
            .into_iter()
            .find(|r| &r.group == group && &r.isotropy == isotropy)
            .map(|r| r.sphere_dim)
    })
}

/// Tags under which an embedding is the one realised in the table.
const STANDARD_TAGS: [&str; 2] = ["standard", "block"];

/// Sphere dimension of `ambient / sub` after dividing out the embedding's
/// declared kernel. Embeddings not tagged `standard` or `block` (maximal or
/// higher Dynkin index inclusions) are never matched.
pub fn sphere_quotient(ambient: &GroupType, sub: &NamedEmbedding) -> Option<u32> {
    if &sub.ambient != ambient {
        return None;
    }
    if !STANDARD_TAGS.iter().any(|t| sub.tags.contains(*t)) {
        return None;
    }
    let kernel = sub.kernel().unwrap_or_default();
    let group = ambient.quotient_by(&kernel)?;
    let isotropy = sub.subgroup.quotient_by(&kernel)?;
    match_sphere_row(&group, &isotropy)
}

/// Dimensions of all spheres on which the simple group `g` acts transitively.
pub fn spheres_acted_on(g: &GroupType) -> Result<BTreeSet<u32>> {
    if !g.is_simple() {
        return Err(Error::Unsupported(format!("{g} is not simple")));
    }
    Ok(SphereRowFamily::ALL
        .iter()
        .flat_map(|fam| fam.rows_up_to_dim(g.dimension()))
        .filter(|r| &r.group == g)
        .map(|r| r.sphere_dim)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GroupType {
        s.parse().unwrap()
    }

    #[test]
    fn every_row_has_matching_dimension() {
        for row in sphere_rows(12) {
            assert_eq!(
                row.group.dimension() - row.isotropy.dimension(),
                row.sphere_dim,
                "{row:?}"
            );
        }
        assert_eq!(transitive_sphere_pairs().len(), 9);
    }

    #[test]
    fn table_lookups() {
        assert_eq!(match_sphere_row(&g("Spin(9)"), &g("Spin(7)")), Some(15));
        assert_eq!(match_sphere_row(&g("G2"), &g("SU(3)")), Some(6));
        for m in 2..10 {
            assert_eq!(
                match_sphere_row(&GroupType::su(m), &GroupType::su(m - 1)),
                Some(2 * m - 1)
            );
        }
        assert_eq!(match_sphere_row(&g("G2"), &g("SO(4)")), None);
        // Local types cannot tell SO(3) from SU(2); the tag check in
        // `sphere_quotient` does.
        assert_eq!(match_sphere_row(&g("SU(3)"), &g("SO(3)")), Some(5));
    }

    #[test]
    fn two_sphere_groups() {
        let set = |v: &[u32]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(spheres_acted_on(&g("Spin(7)")).unwrap(), set(&[6, 7]));
        assert_eq!(spheres_acted_on(&g("Spin(9)")).unwrap(), set(&[8, 15]));
        assert_eq!(spheres_acted_on(&g("SU(2)")).unwrap(), set(&[2, 3]));
        assert_eq!(spheres_acted_on(&g("Sp(2)")).unwrap(), set(&[4, 7]));
        assert_eq!(spheres_acted_on(&g("SU(4)")).unwrap(), set(&[5, 7]));
        assert_eq!(spheres_acted_on(&g("G2")).unwrap(), set(&[6]));
        assert!(spheres_acted_on(&g("E8")).unwrap().is_empty());
        assert!(spheres_acted_on(&g("SU(2)xSU(2)")).is_err());
    }

    #[test]
    fn groups_with_two_spheres_are_exactly_the_known_five() {
        let mut found = Vec::new();
        let mut candidates: Vec<GroupType> = (2..14).map(GroupType::su).collect();
        candidates.extend((5..20).map(GroupType::so));
        candidates.extend((3..10).map(GroupType::sp));
        for f in [Family::G2, Family::F4, Family::E6, Family::E7, Family::E8] {
            candidates.push(GroupType::exceptional(f));
        }
        candidates.sort();
        candidates.dedup();
        for c in candidates {
            let s = spheres_acted_on(&c).unwrap();
            if s.len() >= 2 {
                found.push((c.to_string(), s.into_iter().collect::<Vec<_>>()));
            }
        }
        found.sort();
        let mut expected = vec![
            ("Spin(9)".to_string(), vec![8, 15]),
            ("Spin(7)".to_string(), vec![6, 7]),
            ("SU(2)".to_string(), vec![2, 3]),
            ("Spin(5)".to_string(), vec![4, 7]),
            ("SU(4)".to_string(), vec![5, 7]),
        ];
        expected.sort();
        assert_eq!(found, expected);
    }
}
