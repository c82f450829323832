use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Cartan family of a simple compact Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl Family {
    /// Rank of an exceptional family, `None` for the classical series.
    pub fn fixed_rank(self) -> Option<u32> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 => Some(4),
            Family::G2 => Some(2),
            _ => None,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
            Family::G2 => "G2",
        }
    }
}

/// A simple group label such as `A3` or `G2`, not necessarily canonical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleGroupLabel {
    family: Family,
    rank: u32,
}

impl SimpleGroupLabel {
    pub fn new(family: Family, rank: u32) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidLabel(format!(
                "{}0 has rank 0",
                family.symbol()
            )));
        }
        if let Some(fixed) = family.fixed_rank() {
            if rank != fixed {
                return Err(Error::InvalidLabel(format!(
                    "{} has rank {fixed}, not {rank}",
                    family.symbol()
                )));
            }
        }
        Ok(SimpleGroupLabel { family, rank })
    }

    pub fn exceptional(family: Family) -> Self {
        let rank = family
            .fixed_rank()
            .expect("exceptional() needs an exceptional family");
        SimpleGroupLabel { family, rank }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> u32 {
        self.rank
    }

    /// True if the label is its own canonical form.
    pub fn is_canonical(self) -> bool {
        match self.family {
            Family::B => self.rank >= 2,
            Family::C => self.rank >= 3,
            Family::D => self.rank >= 4,
            _ => true,
        }
    }

    /// Degrees of the rational homotopy generators. The classical formulas
    /// are valid for the low-rank aliases too (`D2` gives `{3,3}`, `D1` gives
    /// `{1}`), which is what makes canonicalization degree-preserving.
    pub fn degrees(self) -> Vec<u32> {
        let n = self.rank;
        let mut out: Vec<u32> = match self.family {
            Family::A => (1..=n).map(|i| 2 * i + 1).collect(),
            Family::B | Family::C => (1..=n).map(|i| 4 * i - 1).collect(),
            Family::D => {
                let mut v: Vec<u32> = (1..n).map(|i| 4 * i - 1).collect();
                v.push(2 * n - 1);
                v
            }
            Family::G2 => vec![3, 11],
            Family::F4 => vec![3, 11, 15, 23],
            Family::E6 => vec![3, 9, 11, 15, 17, 23],
            Family::E7 => vec![3, 11, 15, 19, 23, 27, 35],
            Family::E8 => vec![3, 15, 23, 27, 35, 39, 47, 59],
        };
        out.sort_unstable();
        out
    }

    pub fn dimension(self) -> u32 {
        let n = self.rank;
        match self.family {
            Family::A => n * n + 2 * n,
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::G2 => 14,
            Family::F4 => 52,
            Family::E6 => 78,
            Family::E7 => 133,
            Family::E8 => 248,
        }
    }

    pub fn weyl_order(self) -> BigUint {
        let n = self.rank;
        let factorial = |k: u32| (1..=k).fold(BigUint::from(1u32), |acc, i| acc * i);
        match self.family {
            Family::A => factorial(n + 1),
            Family::B | Family::C => (BigUint::from(1u32) << n) * factorial(n),
            Family::D => (BigUint::from(1u32) << (n - 1)) * factorial(n),
            Family::G2 => BigUint::from(12u32),
            Family::F4 => BigUint::from(1152u32),
            Family::E6 => BigUint::from(51_840u32),
            Family::E7 => BigUint::from(2_903_040u32),
            Family::E8 => BigUint::from(696_729_600u32),
        }
    }

    /// Classical group name of a canonical label: `A3` prints as `SU(4)`.
    fn classical_name(self) -> String {
        let n = self.rank;
        match self.family {
            Family::A => format!("SU({})", n + 1),
            Family::B => format!("Spin({})", 2 * n + 1),
            Family::C => format!("Sp({n})"),
            Family::D => format!("Spin({})", 2 * n),
            f => f.symbol().to_string(),
        }
    }
}

impl fmt::Display for SimpleGroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.fixed_rank().is_some() {
            write!(f, "{}", self.family.symbol())
        } else {
            write!(f, "{}{}", self.family.symbol(), self.rank)
        }
    }
}

impl FromStr for SimpleGroupLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        for fam in [Family::E6, Family::E7, Family::E8, Family::F4, Family::G2] {
            if s == fam.symbol() {
                return Ok(SimpleGroupLabel::exceptional(fam));
            }
        }
        let (head, tail) = s.split_at(s.len().min(1));
        let family = match head {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            _ => return Err(Error::InvalidLabel(s.to_string())),
        };
        let rank = tail
            .parse::<u32>()
            .map_err(|_| Error::InvalidLabel(s.to_string()))?;
        SimpleGroupLabel::new(family, rank)
    }
}

/// Local isomorphism type of a compact connected Lie group: canonical simple
/// factors in sorted order plus a torus rank.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GroupType {
    factors: Vec<SimpleGroupLabel>,
    torus: u32,
}

/// Canonical isomorphism type of a single label.
pub fn canonicalize(label: SimpleGroupLabel) -> GroupType {
    let a1 = SimpleGroupLabel {
        family: Family::A,
        rank: 1,
    };
    match (label.family, label.rank) {
        (Family::B, 1) | (Family::C, 1) => GroupType::from_canonical(vec![a1], 0),
        (Family::C, 2) => GroupType::from_canonical(
            vec![SimpleGroupLabel {
                family: Family::B,
                rank: 2,
            }],
            0,
        ),
        (Family::D, 1) => GroupType::torus(1),
        (Family::D, 2) => GroupType::from_canonical(vec![a1, a1], 0),
        (Family::D, 3) => GroupType::from_canonical(
            vec![SimpleGroupLabel {
                family: Family::A,
                rank: 3,
            }],
            0,
        ),
        _ => GroupType::from_canonical(vec![label], 0),
    }
}

impl GroupType {
    fn from_canonical(mut factors: Vec<SimpleGroupLabel>, torus: u32) -> Self {
        factors.sort_unstable();
        GroupType { factors, torus }
    }

    pub fn trivial() -> Self {
        GroupType::default()
    }

    pub fn torus(rank: u32) -> Self {
        GroupType {
            factors: Vec::new(),
            torus: rank,
        }
    }

    pub fn simple(label: SimpleGroupLabel) -> Self {
        canonicalize(label)
    }

    /// Build from arbitrary labels; each is canonicalized.
    pub fn from_labels(labels: impl IntoIterator<Item = SimpleGroupLabel>, torus: u32) -> Self {
        labels.into_iter().fold(GroupType::torus(torus), |acc, l| {
            acc.times(&canonicalize(l))
        })
    }

    fn classical(family: Family, rank: u32) -> Self {
        if rank == 0 {
            GroupType::trivial()
        } else {
            canonicalize(SimpleGroupLabel { family, rank })
        }
    }

    pub fn su(n: u32) -> Self {
        GroupType::classical(Family::A, n.saturating_sub(1))
    }

    pub fn u(n: u32) -> Self {
        if n == 0 {
            GroupType::trivial()
        } else {
            GroupType::su(n).times(&GroupType::torus(1))
        }
    }

    /// `SO(n)` and `Spin(n)` share a local type.
    pub fn so(n: u32) -> Self {
        if n % 2 == 1 {
            GroupType::classical(Family::B, n / 2)
        } else {
            GroupType::classical(Family::D, n / 2)
        }
    }

    pub fn spin(n: u32) -> Self {
        GroupType::so(n)
    }

    pub fn sp(n: u32) -> Self {
        GroupType::classical(Family::C, n)
    }

    pub fn exceptional(family: Family) -> Self {
        GroupType::simple(SimpleGroupLabel::exceptional(family))
    }

    pub fn times(&self, other: &GroupType) -> GroupType {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        GroupType::from_canonical(factors, self.torus + other.torus)
    }

    pub fn power(&self, k: u32) -> GroupType {
        (0..k).fold(GroupType::trivial(), |acc, _| acc.times(self))
    }

    /// Multiset difference `self / kernel`, or `None` if `kernel` is not a
    /// sub-multiset of the factors.
    pub fn quotient_by(&self, kernel: &GroupType) -> Option<GroupType> {
        if kernel.torus > self.torus {
            return None;
        }
        let mut factors = self.factors.clone();
        for k in &kernel.factors {
            let pos = factors.iter().position(|f| f == k)?;
            factors.remove(pos);
        }
        Some(GroupType {
            factors,
            torus: self.torus - kernel.torus,
        })
    }

    pub fn factors(&self) -> &[SimpleGroupLabel] {
        &self.factors
    }

    pub fn torus_rank(&self) -> u32 {
        self.torus
    }

    pub fn rank(&self) -> u32 {
        self.factors.iter().map(|f| f.rank).sum::<u32>() + self.torus
    }

    pub fn dimension(&self) -> u32 {
        self.factors.iter().map(|f| f.dimension()).sum::<u32>() + self.torus
    }

    /// Sorted multiset of rational homotopy degrees.
    pub fn degrees(&self) -> Vec<u32> {
        let mut out = vec![1; self.torus as usize];
        for f in &self.factors {
            out.extend(f.degrees());
        }
        out.sort_unstable();
        out
    }

    pub fn weyl_order(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::from(1u32), |acc, f| acc * f.weyl_order())
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty() && self.torus == 0
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1 && self.torus == 0
    }

    pub fn is_semisimple(&self) -> bool {
        self.torus == 0
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "{{e}}");
        }
        let mut parts: Vec<String> = self.factors.iter().map(|l| l.classical_name()).collect();
        if self.torus > 0 {
            parts.push(format!("T^{}", self.torus));
        }
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for GroupType {
    type Err = Error;

    /// Parses products such as `SU(3)xSU(2)`, `Sp(1)^3`, `Spin(7)×SO(2)`,
    /// `U(2)`, `T^2`, `S^3xS^1`, Dynkin labels like `D3`, and `{e}` or `1`
    /// for the trivial group.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let normalized = compact.replace(['×', '*'], "x");
        if normalized.is_empty() {
            return Err(Error::InvalidLabel(s.to_string()));
        }
        let mut acc = GroupType::trivial();
        for part in split_factors(&normalized) {
            acc = acc.times(&parse_factor(part).map_err(|e| match e {
                Error::InvalidLabel(m) => Error::InvalidLabel(format!("{m} in `{s}`")),
                other => other,
            })?);
        }
        Ok(acc)
    }
}

/// Split on `x` separators that are not part of a name (no names contain `x`).
fn split_factors(s: &str) -> impl Iterator<Item = &str> {
    s.split('x')
}

fn parse_factor(part: &str) -> Result<GroupType> {
    let (base, power) = match part {
        "S^1" | "S1" => return Ok(GroupType::torus(1)),
        "S^3" | "S3" => return Ok(GroupType::su(2)),
        _ => match part.rfind('^') {
            Some(i) => {
                let k = part[i + 1..]
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidLabel(part.to_string()))?;
                (&part[..i], k)
            }
            None => (part, 1),
        },
    };
    let single = parse_atom(base)?;
    Ok(single.power(power))
}

fn parse_atom(atom: &str) -> Result<GroupType> {
    let bad = || Error::InvalidLabel(atom.to_string());
    match atom {
        "{e}" | "1" | "e" => return Ok(GroupType::trivial()),
        "T" | "S^1" | "S1" => return Ok(GroupType::torus(1)),
        "S^3" | "S3" => return Ok(GroupType::su(2)),
        "G2" => return Ok(GroupType::exceptional(Family::G2)),
        "F4" => return Ok(GroupType::exceptional(Family::F4)),
        "E6" => return Ok(GroupType::exceptional(Family::E6)),
        "E7" => return Ok(GroupType::exceptional(Family::E7)),
        "E8" => return Ok(GroupType::exceptional(Family::E8)),
        _ => {}
    }
    if let Some(inner) = atom.strip_suffix(')') {
        let (name, arg) = inner.split_once('(').ok_or_else(bad)?;
        let n = arg.parse::<u32>().map_err(|_| bad())?;
        return match name {
            "SU" => {
                if n == 0 {
                    Err(bad())
                } else {
                    Ok(GroupType::su(n))
                }
            }
            "U" => Ok(GroupType::u(n)),
            "SO" | "Spin" => {
                if n == 0 {
                    Err(bad())
                } else {
                    Ok(GroupType::so(n))
                }
            }
            "Sp" => Ok(GroupType::sp(n)),
            _ => Err(bad()),
        };
    }
    if let Some(k) = atom.strip_prefix('T') {
        let k = k.parse::<u32>().map_err(|_| bad())?;
        return Ok(GroupType::torus(k));
    }
    atom.parse::<SimpleGroupLabel>().map(canonicalize)
}

impl Serialize for GroupType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
