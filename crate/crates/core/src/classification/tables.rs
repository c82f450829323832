//! Corank-two pairs `L ⊂ G` with rationally two-sphere-like quotients, and
//! the reference rows they are checked against.

use serde::Serialize;

use crate::catalog::Catalog;
use crate::diagram::Case6Fiber;
use crate::error::{Error, Result};
use crate::homotopy::{quotient_homotopy, HomogeneousSpaceModel};
use crate::lie::{spheres_acted_on, GroupType, NamedEmbedding};

/// A pair `L ⊂ G` of simple (or trivial `L`) groups with `rk G - rk L = 2`
/// and `π_*(G/L) ⊗ Q` concentrated in two odd degrees `ℓ₋ ≤ ℓ₋ + ℓ₊`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorankTwoRow {
    pub group: GroupType,
    pub subgroup: GroupType,
    pub ell_minus: u32,
    /// `ℓ₋ + ℓ₊`, the larger generator degree.
    pub sum: u32,
    pub ell_plus: u32,
    pub embedding: String,
    pub notes: Vec<String>,
}

/// Comparison key ignoring provenance.
pub type RowKey = (GroupType, GroupType, u32, u32, u32);

impl CorankTwoRow {
    pub fn key(&self) -> RowKey {
        (
            self.group.clone(),
            self.subgroup.clone(),
            self.ell_minus,
            self.sum,
            self.ell_plus,
        )
    }
}

fn row_from(e: &NamedEmbedding) -> Result<Option<CorankTwoRow>> {
    let (g, l) = (&e.ambient, &e.subgroup);
    if !g.is_simple() || !(l.is_simple() || l.is_trivial()) {
        return Ok(None);
    }
    if g.rank() != l.rank() + 2 || !e.is_declared_injective() {
        return Ok(None);
    }
    let q = quotient_homotopy(&HomogeneousSpaceModel::new(e.clone()))?;
    if !q.even_degrees.is_empty() {
        return Ok(None);
    }
    let [a, b] = q.odd_degrees.as_slice() else {
        return Ok(None);
    };
    let (lo, hi) = ((*a).min(*b), (*a).max(*b));
    let ell_plus = hi - lo;
    let mut notes = Vec::new();
    if q.heuristic {
        notes.push("generic ranks assumed".to_string());
    }
    notes.extend(e.tags.iter().filter(|t| *t != "table2").cloned());
    Ok(Some(CorankTwoRow {
        group: g.clone(),
        subgroup: l.clone(),
        ell_minus: lo,
        sum: hi,
        ell_plus,
        embedding: e.id.clone(),
        notes,
    }))
}

/// Every corank-two row among the catalog embeddings with `rk G ≤ max_rank`,
/// sorted by key.
pub fn enumerate_corank2(catalog: &Catalog, max_rank: u32) -> Result<Vec<CorankTwoRow>> {
    if max_rank < 2 {
        return Err(Error::InvalidParams(format!("max_rank {max_rank} < 2")));
    }
    let mut rows = Vec::new();
    for e in catalog.enumerate_embeddings(max_rank)? {
        if let Some(r) = row_from(&e)? {
            rows.push(r);
        }
    }
    rows.sort_by(|a, b| {
        (a.group.rank(), a.key(), &a.embedding).cmp(&(b.group.rank(), b.key(), &b.embedding))
    });
    Ok(rows)
}

/// Rows whose `ℓ₊`-sphere admits a transitive `L`-action, as required for
/// a fiber `K₊/H = S^{ℓ₊}` with `K₊ ⊃ L`.
pub fn table3_filter(rows: &[CorankTwoRow]) -> Vec<CorankTwoRow> {
    rows.iter()
        .filter(|r| {
            r.ell_plus >= 1
                && !r.subgroup.is_trivial()
                && spheres_acted_on(&r.subgroup).is_ok_and(|s| s.contains(&r.ell_plus))
        })
        .cloned()
        .collect()
}

/// A reference row, optionally one member of a family indexed by `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReferenceRow {
    pub label: String,
    pub group: GroupType,
    pub subgroup: GroupType,
    pub ell_minus: u32,
    pub sum: u32,
    pub ell_plus: u32,
}

impl ReferenceRow {
    pub fn key(&self) -> RowKey {
        (
            self.group.clone(),
            self.subgroup.clone(),
            self.ell_minus,
            self.sum,
            self.ell_plus,
        )
    }
}

fn reference(label: String, g: GroupType, l: GroupType, lo: u32, hi: u32) -> ReferenceRow {
    ReferenceRow {
        label,
        group: g,
        subgroup: l,
        ell_minus: lo,
        sum: hi,
        ell_plus: hi - lo,
    }
}

fn parse(s: &str) -> GroupType {
    s.parse().expect("reference group label")
}

/// The known list of corank-two pairs with `rk G ≤ max_rank`.
pub fn table2_reference(max_rank: u32) -> Vec<ReferenceRow> {
    let mut out = Vec::new();
    // SU(m)/SU(m-2), rank m-1.
    for m in 3..=max_rank + 1 {
        out.push(reference(
            format!("SU({m})/SU({})", m - 2),
            GroupType::su(m),
            GroupType::su(m - 2),
            2 * m - 3,
            2 * m - 1,
        ));
    }
    let fixed = [
        ("SU(6)", "SO(6)", 9, 11),
        ("SU(6)", "Sp(3)", 5, 9),
        ("SU(5)", "Sp(2)", 5, 9),
        ("Spin(9)", "Sp(2)", 11, 15),
        ("Spin(9)", "G2", 7, 15),
        ("Spin(8)", "G2", 7, 7),
        ("E6", "F4", 9, 17),
        ("F4", "G2", 15, 23),
        ("G2", "{e}", 3, 11),
    ];
    for (g, l, lo, hi) in fixed {
        let g = parse(g);
        if g.rank() <= max_rank {
            out.push(reference(format!("{g}/{l}"), g, parse(l), lo, hi));
        }
    }
    // Spin(2m+1)/Spin(2m-3) and Sp(m)/Sp(m-2), rank m.
    for m in 3..=max_rank {
        out.push(reference(
            format!("Spin({})/Spin({})", 2 * m + 1, 2 * m - 3),
            GroupType::spin(2 * m + 1),
            GroupType::spin(2 * m - 3),
            4 * m - 5,
            4 * m - 1,
        ));
    }
    for m in 2..=max_rank {
        out.push(reference(
            format!("Sp({m})/Sp({})", m - 2),
            GroupType::sp(m),
            GroupType::sp(m - 2),
            4 * m - 5,
            4 * m - 1,
        ));
    }
    // Spin(2m)/Spin(2m-3), rank m.
    for m in 4..=max_rank {
        out.push(reference(
            format!("Spin({})/Spin({})", 2 * m, 2 * m - 3),
            GroupType::spin(2 * m),
            GroupType::spin(2 * m - 3),
            2 * m - 1,
            4 * m - 5,
        ));
    }
    out.sort_by_key(|r| (r.group.rank(), r.key()));
    out
}

/// The rows of [`table2_reference`] that survive [`table3_filter`].
pub fn table3_reference(max_rank: u32) -> Vec<ReferenceRow> {
    let mut out: Vec<ReferenceRow> = Vec::new();
    if max_rank >= 3 {
        out.push(reference(
            "SU(4)/SU(2)".into(),
            GroupType::su(4),
            GroupType::su(2),
            5,
            7,
        ));
    }
    if max_rank >= 4 {
        out.push(reference(
            "SU(5)/Sp(2)".into(),
            GroupType::su(5),
            GroupType::sp(2),
            5,
            9,
        ));
        out.push(reference(
            "Spin(9)/Spin(5)".into(),
            GroupType::spin(9),
            GroupType::spin(5),
            11,
            15,
        ));
        out.push(reference(
            "Spin(9)/Sp(2)".into(),
            GroupType::spin(9),
            GroupType::sp(2),
            11,
            15,
        ));
        out.push(reference(
            "Sp(4)/Sp(2)".into(),
            GroupType::sp(4),
            GroupType::sp(2),
            11,
            15,
        ));
    }
    for m in 4..=max_rank {
        out.push(reference(
            format!("Spin({})/Spin({})", 2 * m, 2 * m - 3),
            GroupType::spin(2 * m),
            GroupType::spin(2 * m - 3),
            2 * m - 1,
            4 * m - 5,
        ));
    }
    out.sort_by_key(|r| (r.group.rank(), r.key()));
    out
}

/// The five fibers `G/H` with equal ℓ on both sides, with their loop sphere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Case6Pair {
    pub fiber: Case6Fiber,
    pub group: GroupType,
    pub subgroup: GroupType,
    pub ell: u32,
    pub loop_sphere: u32,
}

pub fn case6_pairs() -> Vec<Case6Pair> {
    Case6Fiber::ALL
        .iter()
        .map(|&f| Case6Pair {
            fiber: f,
            group: f.group(),
            subgroup: f.subgroup(),
            ell: f.ell(),
            loop_sphere: f.loop_sphere(),
        })
        .collect()
}

/// Multiset difference of keys: `(only in computed, only in reference)`.
pub fn compare_keys(computed: &[RowKey], reference: &[RowKey]) -> (Vec<RowKey>, Vec<RowKey>) {
    let mut missing: Vec<RowKey> = reference.to_vec();
    let mut extra = Vec::new();
    for k in computed {
        match missing.iter().position(|r| r == k) {
            Some(i) => {
                missing.remove(i);
            }
            None => extra.push(k.clone()),
        }
    }
    (extra, missing)
}
