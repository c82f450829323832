//! Homology of the Brieskorn varieties `B^(2m-1)_d`, the links of
//! `z0^d + z1^2 + ... + zm^2 = 0`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polynomial::IntegerPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BrieskornParams {
    pub m: u32,
    pub d: u32,
}

impl BrieskornParams {
    pub fn new(m: u32, d: u32) -> Result<Self> {
        if m < 3 {
            return Err(Error::Unsupported(format!(
                "m = {m}: only m >= 3 is handled (B^3_d is not simply connected)"
            )));
        }
        if d < 1 {
            return Err(Error::InvalidParams("d must be at least 1".into()));
        }
        Ok(BrieskornParams { m, d })
    }

    pub fn dimension(self) -> u32 {
        2 * self.m - 1
    }

    /// The homology is that of a sphere over Q exactly when this holds.
    pub fn is_rational_sphere(self) -> bool {
        self.m.is_multiple_of(2) || self.d % 2 == 1
    }

    fn sign(self) -> i64 {
        if self.m.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Characteristic polynomial of the monodromy,
/// `(t^d - (-1)^(md)) / (t - (-1)^m)`.
pub fn delta_poly(p: BrieskornParams) -> Result<IntegerPolynomial> {
    let eps = p.sign();
    let eps_d = if p.d.is_multiple_of(2) { 1 } else { eps };
    let num = &IntegerPolynomial::monomial(1, p.d as usize) - &IntegerPolynomial::new(vec![eps_d]);
    let den = IntegerPolynomial::new(vec![-eps, 1]);
    let (q, rem) = num
        .div_rem(&den)
        .ok_or_else(|| Error::Internal("monic division failed".into()))?;
    if !rem.is_zero() {
        return Err(Error::Internal(format!(
            "Δ(t) division left remainder {rem}"
        )));
    }
    Ok(q)
}

/// Closed form of `Δ(1)`.
pub fn delta_at_one(p: BrieskornParams) -> i64 {
    match (p.m % 2, p.d % 2) {
        (0, _) => p.d as i64,
        (_, 0) => 0,
        _ => 1,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyEntry {
    pub degree: u32,
    pub free_rank: u32,
    pub torsion: Vec<u64>,
}

/// Nonzero homology groups, by increasing degree.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct GradedAbelianGroup {
    pub entries: Vec<HomologyEntry>,
}

impl GradedAbelianGroup {
    /// Add `Z^free ⊕ torsion` in `degree`; zero groups are dropped.
    pub fn push(&mut self, degree: u32, free_rank: u32, torsion: Vec<u64>) {
        let torsion: Vec<u64> = torsion.into_iter().filter(|&t| t > 1).collect();
        if free_rank == 0 && torsion.is_empty() {
            return;
        }
        debug_assert!(self.entries.last().is_none_or(|e| e.degree < degree));
        self.entries.push(HomologyEntry {
            degree,
            free_rank,
            torsion,
        });
    }

    pub fn get(&self, degree: u32) -> Option<&HomologyEntry> {
        self.entries.iter().find(|e| e.degree == degree)
    }

    pub fn free_rank(&self, degree: u32) -> u32 {
        self.get(degree).map_or(0, |e| e.free_rank)
    }

    /// Order of the torsion subgroup in `degree`.
    pub fn torsion_order(&self, degree: u32) -> u64 {
        self.get(degree).map_or(1, |e| e.torsion.iter().product())
    }

    /// Free ranks only in degrees 0 and `n`, each of rank one.
    pub fn is_rational_sphere(&self, n: u32) -> bool {
        self.entries.iter().all(|e| match e.degree {
            0 => e.free_rank == 1,
            k if k == n => e.free_rank == 1,
            _ => e.free_rank == 0,
        }) && self.free_rank(0) == 1
            && self.free_rank(n) == 1
    }
}

impl fmt::Display for GradedAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| {
                let mut summands = Vec::new();
                match e.free_rank {
                    0 => {}
                    1 => summands.push("Z".to_string()),
                    r => summands.push(format!("Z^{r}")),
                }
                summands.extend(e.torsion.iter().map(|t| format!("Z/{t}")));
                format!("H_{} = {}", e.degree, summands.join(" + "))
            })
            .collect();
        f.write_str(&parts.join(", "))
    }
}

/// Integral homology: `Z` in degrees 0 and `2m-1`; the middle degree `m-1`
/// is `Z/|Δ(1)|`, or `Z` when `Δ(1) = 0`, in which case duality puts a
/// second `Z` in degree `m`.
pub fn homology(p: BrieskornParams) -> Result<GradedAbelianGroup> {
    let delta = delta_poly(p)?.eval(1);
    let mut h = GradedAbelianGroup::default();
    h.push(0, 1, vec![]);
    if delta == 0 {
        h.push(p.m - 1, 1, vec![]);
        h.push(p.m, 1, vec![]);
    } else {
        h.push(p.m - 1, 0, vec![delta.unsigned_abs()]);
    }
    h.push(p.dimension(), 1, vec![]);
    Ok(h)
}
