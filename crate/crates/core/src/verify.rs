//! Cross-check every computable table against its reference values.

use serde::Serialize;
use serde_json::{json, Value};

use crate::brieskorn::{delta_at_one, delta_poly, homology, BrieskornParams};
use crate::catalog::Catalog;
use crate::classification::{
    case6_pairs, classify_diagram, enumerate_corank2, realize_torsion, seven_family_torsion,
    table2_reference, table3_filter, table3_reference, ClassificationOutcome, CorankTwoRow,
    ReferenceRow,
};
use crate::diagram::{double_disk_euler, mv_feasible, validate, ValidatedDiagram};
use crate::error::Result;
use crate::lie::{match_sphere_row, sphere_rows};

pub const SPHERE_TABLE_MAX_M: u32 = 12;
pub const CORANK2_MAX_RANK: u32 = 9;
pub const BRIESKORN_M: std::ops::RangeInclusive<u32> = 3..=10;
pub const BRIESKORN_D: std::ops::RangeInclusive<u32> = 1..=50;
pub const SEVEN_T: std::ops::RangeInclusive<u64> = 1..=1000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub table: String,
    pub cell: String,
    pub expected: Value,
    pub computed: Value,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub total: usize,
    pub failures: usize,
    pub records: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn all_match(&self) -> bool {
        self.failures == 0
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.matches)
    }
}

#[derive(Default)]
struct Recorder(Vec<CheckRecord>);

impl Recorder {
    fn check(&mut self, table: &str, cell: impl Into<String>, expected: Value, computed: Value) {
        let matches = expected == computed;
        self.0.push(CheckRecord {
            table: table.into(),
            cell: cell.into(),
            expected,
            computed,
            matches,
        });
    }
}

/// Run every check against `catalog`. The record order is fixed.
pub fn verify_tables(catalog: &Catalog) -> Result<VerificationReport> {
    let mut rec = Recorder::default();
    sphere_table(&mut rec);
    corank2_tables(&mut rec, catalog)?;
    brieskorn_grid(&mut rec)?;
    seven_family(&mut rec)?;
    let diagrams = catalog
        .diagrams()?
        .into_iter()
        .map(|doc| {
            let name = doc.name.clone();
            (name, catalog.resolve(&doc).map(validate))
        })
        .collect::<Vec<_>>();
    let mut valid = Vec::new();
    for (name, resolved) in diagrams {
        match resolved? {
            Ok(d) => {
                rec.check("diagrams", format!("{name}: valid"), json!([]), json!([]));
                valid.push(d);
            }
            Err(violations) => {
                let rules: Vec<&str> = violations.iter().map(|v| v.rule).collect();
                rec.check(
                    "diagrams",
                    format!("{name}: valid"),
                    json!([]),
                    json!(rules),
                );
            }
        }
    }
    table5(&mut rec, &valid);
    case6(&mut rec, &valid)?;
    diagram_consistency(&mut rec, &valid)?;
    let records = rec.0;
    Ok(VerificationReport {
        total: records.len(),
        failures: records.iter().filter(|r| !r.matches).count(),
        records,
    })
}

fn sphere_table(rec: &mut Recorder) {
    for row in sphere_rows(SPHERE_TABLE_MAX_M) {
        let cell = format!("{}/{}", row.group, row.isotropy);
        rec.check(
            "table1",
            format!("{cell}: dimension"),
            json!(row.sphere_dim),
            json!(row.group.dimension() - row.isotropy.dimension()),
        );
        rec.check(
            "table1",
            format!("{cell}: lookup"),
            json!(row.sphere_dim),
            json!(match_sphere_row(&row.group, &row.isotropy)),
        );
    }
}

fn row_json(r: &CorankTwoRow) -> Value {
    json!([r.ell_minus, r.sum, r.ell_plus])
}

fn ref_json(r: &ReferenceRow) -> Value {
    json!([r.ell_minus, r.sum, r.ell_plus])
}

fn compare_rows(
    rec: &mut Recorder,
    table: &str,
    computed: &[CorankTwoRow],
    reference: &[ReferenceRow],
) {
    let mut unused: Vec<&CorankTwoRow> = computed.iter().collect();
    for r in reference {
        let hit = unused.iter().position(|c| c.key() == r.key());
        let found = hit.map(|i| unused.remove(i));
        rec.check(
            table,
            r.label.clone(),
            ref_json(r),
            found.map_or(Value::Null, row_json),
        );
    }
    for c in unused {
        rec.check(
            table,
            format!("{}/{} ({})", c.group, c.subgroup, c.embedding),
            Value::Null,
            row_json(c),
        );
    }
}

fn corank2_tables(rec: &mut Recorder, catalog: &Catalog) -> Result<()> {
    let rows = enumerate_corank2(catalog, CORANK2_MAX_RANK)?;
    compare_rows(rec, "table2", &rows, &table2_reference(CORANK2_MAX_RANK));
    compare_rows(
        rec,
        "table3",
        &table3_filter(&rows),
        &table3_reference(CORANK2_MAX_RANK),
    );
    Ok(())
}

fn brieskorn_grid(rec: &mut Recorder) -> Result<()> {
    for m in BRIESKORN_M {
        for d in BRIESKORN_D {
            let p = BrieskornParams::new(m, d)?;
            let cell = format!("m={m},d={d}");
            rec.check(
                "brieskorn",
                format!("{cell}: Δ(1)"),
                json!(delta_at_one(p)),
                json!(delta_poly(p)?.eval(1)),
            );
            let h = homology(p)?;
            rec.check(
                "brieskorn",
                format!("{cell}: rational sphere"),
                json!(m % 2 == 0 || d % 2 == 1),
                json!(h.is_rational_sphere(p.dimension())),
            );
        }
    }
    Ok(())
}

fn seven_family(rec: &mut Recorder) -> Result<()> {
    for t in SEVEN_T {
        let r = seven_family_torsion(&realize_torsion(t)?)?;
        rec.check("seven", format!("t={t}"), json!(t), json!(r));
    }
    Ok(())
}

fn outcome_label(o: &ClassificationOutcome) -> String {
    match o {
        ClassificationOutcome::LinearSphere { .. } => "LinearSphere".into(),
        ClassificationOutcome::Brieskorn { m, d } => format!("Brieskorn({m},{d})"),
        ClassificationOutcome::Wu => "Wu".into(),
        ClassificationOutcome::G2modSU2 { index } => format!("G2modSU2({index})"),
        ClassificationOutcome::SevenFamily { r, .. } => format!("SevenFamily({r})"),
        ClassificationOutcome::NotRationalSphere { .. } => "NotRationalSphere".into(),
        ClassificationOutcome::Unmatched => "Unmatched".into(),
    }
}

const TABLE5: [(&str, &str); 5] = [
    ("table5-row1", "G2modSU2(3)"),
    ("table5-row2", "NotRationalSphere"),
    ("table5-row3", "NotRationalSphere"),
    ("table5-row4", "LinearSphere"),
    ("table5-row5", "G2modSU2(1)"),
];

fn table5(rec: &mut Recorder, diagrams: &[ValidatedDiagram]) {
    for (name, expected) in TABLE5 {
        let computed = diagrams
            .iter()
            .find(|d| d.name == name)
            .map(|d| outcome_label(&classify_diagram(d)));
        rec.check("table5", name, json!(expected), json!(computed));
    }
}

fn case6(rec: &mut Recorder, diagrams: &[ValidatedDiagram]) -> Result<()> {
    for pair in case6_pairs() {
        let cell = pair.fiber.label();
        let Some(d) = diagrams
            .iter()
            .find(|d| d.group == pair.group && d.h.subgroup == pair.subgroup)
        else {
            rec.check(
                "case6",
                format!("{cell}: diagram"),
                json!(true),
                json!(false),
            );
            continue;
        };
        rec.check(
            "case6",
            format!("{cell}: ℓ±"),
            json!([pair.ell, pair.ell]),
            json!([d.ell_minus, d.ell_plus]),
        );
        rec.check(
            "case6",
            format!("{cell}: dimension"),
            json!(pair.loop_sphere),
            json!(d.manifold_dim()),
        );
        let euler = double_disk_euler(d)?;
        rec.check(
            "case6",
            format!("{cell}: χ"),
            json!("0"),
            json!(euler.value.to_string()),
        );
    }
    Ok(())
}

/// Every diagram is classified and has the Euler characteristic of a sphere.
/// Rational-sphere diagrams sit in a forced dimension and, with declared
/// Betti numbers, pass the Mayer-Vietoris check.
fn diagram_consistency(rec: &mut Recorder, diagrams: &[ValidatedDiagram]) -> Result<()> {
    for d in diagrams {
        let outcome = classify_diagram(d);
        rec.check(
            "diagrams",
            format!("{}: classified", d.name),
            json!(true),
            json!(outcome != ClassificationOutcome::Unmatched),
        );
        if outcome.is_rational_sphere() {
            rec.check(
                "diagrams",
                format!("{}: forced dimension", d.name),
                json!(true),
                json!(d.dimension_is_forced()?),
            );
        }
        let euler = double_disk_euler(d)?;
        rec.check(
            "diagrams",
            format!("{}: χ", d.name),
            json!(true),
            json!(euler.consistent),
        );
        if let (Some(b), true) = (&d.betti, outcome.is_rational_sphere()) {
            let n = u32::try_from(d.manifold_dim()).unwrap_or(0);
            let mv = mv_feasible(&b.h, &b.k_plus, &b.k_minus, n);
            rec.check(
                "diagrams",
                format!("{}: Mayer-Vietoris", d.name),
                json!("feasible"),
                json!(mv.verdict),
            );
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_catalog_verifies() {
        let report = verify_tables(Catalog::shipped()).unwrap();
        let failed: Vec<_> = report.failed().collect();
        assert!(failed.is_empty(), "{failed:#?}");
        assert_eq!(report.total, report.records.len());
    }

    #[test]
    fn report_is_deterministic() {
        let a = serde_json::to_string(&verify_tables(Catalog::shipped()).unwrap()).unwrap();
        let b = serde_json::to_string(&verify_tables(Catalog::shipped()).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
