use super::outcome::ClassificationOutcome;
use super::seven::{seven_family_torsion, SevenFamilyParams};
use crate::brieskorn::BrieskornParams;
use crate::diagram::ValidatedDiagram;
use crate::lie::NamedEmbedding;
use crate::template::{parse_instance_id, Params};

use ClassificationOutcome as Outcome;

/// Match a diagram against the catalogued families by the families of its
/// three embeddings, trying both orientations.
pub fn classify_diagram(d: &ValidatedDiagram) -> ClassificationOutcome {
    match_oriented(d)
        .or_else(|| match_oriented(&d.swapped()))
        .unwrap_or(Outcome::Unmatched)
}

struct Slot {
    family: String,
    params: Params,
}

impl Slot {
    fn of(e: &NamedEmbedding) -> Option<Slot> {
        let (family, params) = parse_instance_id(&e.id).ok()?;
        Some(Slot { family, params })
    }

    fn get(&self, key: &str) -> Option<i64> {
        self.params.get(key).copied()
    }
}

fn linear(description: impl Into<String>) -> Option<Outcome> {
    Some(Outcome::LinearSphere {
        description: description.into(),
    })
}

fn not_sphere(reason: impl Into<String>) -> Option<Outcome> {
    Some(Outcome::NotRationalSphere {
        reason: reason.into(),
    })
}

fn brieskorn(m: i64, d: i64) -> Option<Outcome> {
    let p = BrieskornParams::new(u32::try_from(m).ok()?, u32::try_from(d).ok()?).ok()?;
    if p.d == 1 {
        return linear(format!("SO(2)xSO({m}) on S^{}", p.dimension()));
    }
    if p.is_rational_sphere() {
        Some(Outcome::Brieskorn { m: p.m, d: p.d })
    } else {
        not_sphere(format!(
            "B^{}_{d} has H_{} of rank one (m odd, d even)",
            p.dimension(),
            m - 1
        ))
    }
}

fn seven(minus: &Slot, plus: &Slot) -> Option<Outcome> {
    let (pm, qm) = (minus.get("p")?, minus.get("q")?);
    let (pp, qp) = (plus.get("p")?, plus.get("q")?);
    // The two circle orbits are interchangeable; order them so the outcome
    // does not depend on the orientation of the diagram.
    let ((pm, qm), (pp, qp)) = if (pm, qm) <= (pp, qp) {
        ((pm, qm), (pp, qp))
    } else {
        ((pp, qp), (pm, qm))
    };
    let params = SevenFamilyParams::new(pm, qm, pp, qp).ok()?;
    match seven_family_torsion(&params).ok()? {
        0 => not_sphere("r = 0, so H^4 has rank one"),
        r => Some(Outcome::SevenFamily { params, r }),
    }
}

fn match_oriented(d: &ValidatedDiagram) -> Option<Outcome> {
    let h = Slot::of(&d.h)?;
    let km = Slot::of(&d.k_minus)?;
    let kp = Slot::of(&d.k_plus)?;
    let same = |key: &str| {
        let v = km.get(key);
        v.is_some() && h.get(key) == v && kp.get(key) == v
    };
    match (h.family.as_str(), km.family.as_str(), kp.family.as_str()) {
        ("brieskorn-h", "brieskorn-kminus", "brieskorn-kplus") if same("m") => {
            brieskorn(km.get("m")?, km.get("d")?)
        }
        ("brieskorn8-h", "brieskorn8-kminus", "brieskorn8-kplus") => brieskorn(8, km.get("d")?),
        ("brieskorn7-h", "brieskorn7-kminus", "brieskorn7-kplus") => brieskorn(7, km.get("d")?),
        ("wu-h", "wu-kminus", "wu-kplus") => Some(Outcome::Wu),
        ("t5-h-221", "t5-kminus-r1", "t5-kplus-so3") => Some(Outcome::G2modSU2 { index: 3 }),
        ("t5-h-221", "t5-kminus-r5", "t5-kplus-so3") => Some(Outcome::G2modSU2 { index: 1 }),
        ("t5-h-221", "t5-kminus-r23", "t5-kplus-so3")
        | ("t5-h-111", "t5-kminus-r23", "t5-kplus-block") => {
            not_sphere("Mayer-Vietoris forces extra rational cohomology")
        }
        ("t5-h-111", "t5-kminus-r4", "t5-kplus-block") => linear("SU(3)xSU(2) on C^3 ⊗ C^2, S^11"),
        ("su2su2-in-su5", "su3su2-in-su5", "sp2-in-su5") => linear("SU(5) on Λ²C^5, S^19"),
        ("su4-in-spin10", "su5-in-spin10", "spin-even-corank3") if kp.get("m") == Some(5) => {
            linear("Spin(10) on the half-spin representation, S^31")
        }
        ("tensor-su-h", "tensor-su-kminus", "tensor-su-kplus") if same("n") => {
            let n = km.get("n")?;
            linear(format!("SU({n})xSU(2) on C^{n} ⊗ C^2, S^{}", 4 * n - 1))
        }
        ("tensor-sp-h", "tensor-sp-kminus", "tensor-sp-kplus") if same("n") => {
            let n = km.get("n")?;
            linear(format!("Sp({n})xSp(2) on H^{n} ⊗ H^2, S^{}", 8 * n - 1))
        }
        ("t2-in-su3", "u2a-in-su3", "u2b-in-su3") => linear("adjoint action of SU(3), S^7"),
        ("t2-in-sp2", "u2-in-sp2", "sp1u1-in-sp2") => linear("adjoint action of Sp(2), S^9"),
        ("t2-in-g2", "u2-long-in-g2", "u2-short-in-g2") => linear("adjoint action of G2, S^13"),
        ("sp1cubed-in-sp3", "sp2sp1-a-in-sp3", "sp2sp1-b-in-sp3") => {
            linear("Sp(3) on the 14-dimensional representation, S^13")
        }
        ("spin8-in-f4", "spin9a-in-f4", "spin9b-in-f4") => {
            linear("F4 on the 26-dimensional representation, S^25")
        }
        ("seven-h", "seven-circle", "seven-circle") => seven(&km, &kp),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use crate::diagram::validate;

    fn classify(name: &str) -> Outcome {
        let cat = Catalog::shipped();
        let d = validate(cat.resolve(&cat.diagram(name).unwrap()).unwrap()).unwrap();
        classify_diagram(&d)
    }

    #[test]
    fn known_outcomes() {
        assert_eq!(
            classify("brieskorn[m=5,d=3]"),
            Outcome::Brieskorn { m: 5, d: 3 }
        );
        assert!(!classify("brieskorn[m=5,d=2]").is_rational_sphere());
        assert_eq!(
            classify("brieskorn[m=4,d=2]"),
            Outcome::Brieskorn { m: 4, d: 2 }
        );
        assert!(matches!(
            classify("brieskorn[m=4,d=1]"),
            Outcome::LinearSphere { .. }
        ));
        assert_eq!(classify("wu"), Outcome::Wu);
        assert_eq!(classify("table5-row1"), Outcome::G2modSU2 { index: 3 });
        assert_eq!(classify("table5-row5"), Outcome::G2modSU2 { index: 1 });
        assert!(!classify("table5-row2").is_rational_sphere());
        assert!(!classify("table5-row3").is_rational_sphere());
        assert!(matches!(
            classify("table5-row4"),
            Outcome::LinearSphere { .. }
        ));
        assert!(matches!(
            classify("seven[pm=-3,qm=1,pp=5,qp=1]"),
            Outcome::SevenFamily { r: 2, .. }
        ));
        assert!(!classify("seven[pm=1,qm=1,pp=1,qp=1]").is_rational_sphere());
    }

    #[test]
    fn outcome_is_swap_invariant() {
        let cat = Catalog::shipped();
        for doc in cat.diagrams().unwrap() {
            let d = validate(cat.resolve(&doc).unwrap()).unwrap();
            let a = classify_diagram(&d);
            assert_ne!(a, Outcome::Unmatched, "{}", doc.name);
            assert_eq!(a, classify_diagram(&d.swapped()), "{}", doc.name);
        }
    }
}
