use std::ops::Deref;

use serde::Serialize;

use super::gh::{gh_classify, Case6Fiber, GhCaseResult};
use super::GroupDiagram;
use crate::error::Result;
use crate::lie::{sphere_quotient, NamedEmbedding};

/// A failed structural rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: &'static str,
    pub detail: String,
}

/// A diagram that passed [`validate`], with its fiber dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidatedDiagram {
    pub diagram: GroupDiagram,
    pub ell_minus: u32,
    pub ell_plus: u32,
}

impl Deref for ValidatedDiagram {
    type Target = GroupDiagram;

    fn deref(&self) -> &GroupDiagram {
        &self.diagram
    }
}

impl ValidatedDiagram {
    pub fn swapped(&self) -> ValidatedDiagram {
        ValidatedDiagram {
            diagram: self.diagram.swapped(),
            ell_minus: self.ell_plus,
            ell_plus: self.ell_minus,
        }
    }

    /// Cases compatible with the fiber dimensions and orientability flags.
    /// Case 6 is restricted to the fiber `G/H` when it is one of the five.
    pub fn gh_cases(&self) -> Result<Vec<GhCaseResult>> {
        let hint = Case6Fiber::for_pair(&self.group, &self.h.subgroup);
        let cases = gh_classify(
            self.ell_minus,
            self.ell_plus,
            self.nonorientable_count(),
            hint,
        )?;
        Ok(match hint {
            Some(_) => cases,
            None => cases.into_iter().filter(|c| c.case_index != 6).collect(),
        })
    }

    /// Whether the manifold dimension is one a rational sphere could have.
    pub fn dimension_is_forced(&self) -> Result<bool> {
        let n = self.manifold_dim();
        Ok(self
            .gh_cases()?
            .iter()
            .any(|c| i64::from(c.forced_dim) == n))
    }
}

fn violation(rule: &'static str, detail: impl Into<String>) -> Violation {
    Violation {
        rule,
        detail: detail.into(),
    }
}

fn check_fiber(
    side: &str,
    k: &NamedEmbedding,
    fiber: &NamedEmbedding,
    h: &NamedEmbedding,
    ell: i64,
    out: &mut Vec<Violation>,
) {
    if fiber.ambient != k.subgroup || fiber.subgroup != h.subgroup {
        out.push(violation(
            "fiber-containment",
            format!(
                "fiber `{}` is {} in {}, expected {} in {} for {side}",
                fiber.id, fiber.subgroup, fiber.ambient, h.subgroup, k.subgroup
            ),
        ));
        return;
    }
    if ell < 1 {
        return;
    }
    match sphere_quotient(&k.subgroup, fiber) {
        Some(l) if l as i64 == ell => {}
        Some(l) => out.push(violation(
            "fiber-sphere",
            format!("{side}/H is S^{l} but the dimension count gives {ell}"),
        )),
        None => out.push(violation(
            "fiber-sphere",
            format!(
                "{side}/H via `{}` is not a transitive sphere action",
                fiber.id
            ),
        )),
    }
}

/// Structural checks on a diagram. All violations are collected.
pub fn validate(d: GroupDiagram) -> Result<ValidatedDiagram, Vec<Violation>> {
    let mut out = Vec::new();
    for (name, e) in [("H", &d.h), ("K-", &d.k_minus), ("K+", &d.k_plus)] {
        if e.ambient != d.group {
            out.push(violation(
                "ambient",
                format!(
                    "{name} `{}` embeds into {}, not {}",
                    e.id, e.ambient, d.group
                ),
            ));
        }
    }
    let (lm, lp) = (d.ell_minus(), d.ell_plus());
    for (side, l) in [("K-", lm), ("K+", lp)] {
        if l < 1 {
            out.push(violation(
                "fiber-dimension",
                format!("dim {side} - dim H = {l}, fibers must have positive dimension"),
            ));
        }
    }
    check_fiber("K-", &d.k_minus, &d.fiber_minus, &d.h, lm, &mut out);
    check_fiber("K+", &d.k_plus, &d.fiber_plus, &d.h, lp, &mut out);

    let c = d.components;
    if c.h == 0 || c.k_minus == 0 || c.k_plus == 0 {
        out.push(violation(
            "component-count",
            "component counts must be positive",
        ));
    }
    if lm >= 2 && lp >= 2 && (c.h, c.k_minus, c.k_plus) != (1, 1, 1) {
        out.push(violation(
            "connected-orbits",
            format!(
                "both fibers have dimension >= 2, so H and K± are connected; got components {}/{}/{}",
                c.h, c.k_minus, c.k_plus
            ),
        ));
    }
    // With one circle fiber, H and the other singular isotropy share their
    // component group.
    let paired = if lp == 1 && lm > 1 {
        Some(("K-", c.k_minus))
    } else if lm == 1 && lp > 1 {
        Some(("K+", c.k_plus))
    } else {
        None
    };
    if let Some((side, k)) = paired {
        if k != c.h {
            out.push(violation(
                "component-annotation",
                format!("H has {} components but {side} has {k}", c.h),
            ));
        }
    }
    if !d.h_projections_proper {
        out.push(violation(
            "effective-action",
            "H must project to a proper subgroup of every simple factor of G",
        ));
    }

    if out.is_empty() {
        Ok(ValidatedDiagram {
            ell_minus: lm as u32,
            ell_plus: lp as u32,
            diagram: d,
        })
    } else {
        Err(out)
    }
}
