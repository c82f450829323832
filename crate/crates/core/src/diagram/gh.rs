//! Rational homotopy cases of the fiber of `G/H -> M` and the dimension they
//! force on a rational sphere `M`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{Family, GroupType};

/// The five equal-rank fibers of case 6.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Case6Fiber {
    #[serde(rename = "SU(3)/T^2")]
    Su3Torus,
    #[serde(rename = "Sp(2)/T^2")]
    Sp2Torus,
    #[serde(rename = "G2/T^2")]
    G2Torus,
    #[serde(rename = "Sp(3)/Sp(1)^3")]
    Sp3Sp1Cubed,
    #[serde(rename = "F4/Spin(8)")]
    F4Spin8,
}

impl Case6Fiber {
    pub const ALL: [Case6Fiber; 5] = [
        Case6Fiber::Su3Torus,
        Case6Fiber::Sp2Torus,
        Case6Fiber::G2Torus,
        Case6Fiber::Sp3Sp1Cubed,
        Case6Fiber::F4Spin8,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Case6Fiber::Su3Torus => "SU(3)/T^2",
            Case6Fiber::Sp2Torus => "Sp(2)/T^2",
            Case6Fiber::G2Torus => "G2/T^2",
            Case6Fiber::Sp3Sp1Cubed => "Sp(3)/Sp(1)^3",
            Case6Fiber::F4Spin8 => "F4/Spin(8)",
        }
    }

    /// Common value of `ℓ₋ = ℓ₊`.
    pub fn ell(self) -> u32 {
        match self {
            Case6Fiber::Su3Torus | Case6Fiber::Sp2Torus | Case6Fiber::G2Torus => 2,
            Case6Fiber::Sp3Sp1Cubed => 4,
            Case6Fiber::F4Spin8 => 8,
        }
    }

    /// Dimension of the looped sphere, which is the forced dimension.
    pub fn loop_sphere(self) -> u32 {
        match self {
            Case6Fiber::Su3Torus => 7,
            Case6Fiber::Sp2Torus => 9,
            Case6Fiber::G2Torus | Case6Fiber::Sp3Sp1Cubed => 13,
            Case6Fiber::F4Spin8 => 25,
        }
    }

    pub fn group(self) -> GroupType {
        match self {
            Case6Fiber::Su3Torus => GroupType::su(3),
            Case6Fiber::Sp2Torus => GroupType::sp(2),
            Case6Fiber::G2Torus => GroupType::exceptional(Family::G2),
            Case6Fiber::Sp3Sp1Cubed => GroupType::sp(3),
            Case6Fiber::F4Spin8 => GroupType::exceptional(Family::F4),
        }
    }

    pub fn subgroup(self) -> GroupType {
        match self {
            Case6Fiber::Su3Torus | Case6Fiber::Sp2Torus | Case6Fiber::G2Torus => {
                GroupType::torus(2)
            }
            Case6Fiber::Sp3Sp1Cubed => GroupType::sp(1).power(3),
            Case6Fiber::F4Spin8 => GroupType::spin(8),
        }
    }

    /// The fiber whose homogeneous space is `group / subgroup`, if any.
    pub fn for_pair(group: &GroupType, subgroup: &GroupType) -> Option<Case6Fiber> {
        Case6Fiber::ALL
            .into_iter()
            .find(|f| &f.group() == group && &f.subgroup() == subgroup)
    }
}

impl fmt::Display for Case6Fiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Case6Fiber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        Case6Fiber::ALL
            .into_iter()
            .find(|f| f.label().eq_ignore_ascii_case(&norm))
            .ok_or_else(|| Error::InvalidParams(format!("unknown case-6 fiber `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GhCaseResult {
    pub case_index: u8,
    pub fiber_model: String,
    pub forced_dim: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fiber: Option<Case6Fiber>,
}

fn case(case_index: u8, fiber_model: String, forced_dim: u32) -> GhCaseResult {
    GhCaseResult {
        case_index,
        fiber_model,
        forced_dim,
        fiber: None,
    }
}

/// All cases compatible with the fiber dimensions and the number `h` of
/// non-orientable singular orbits, each with the dimension it forces.
///
/// For `h = 1` the circle fiber may sit on either side; the other fiber then
/// plays the role of `ℓ₋`. A `hint` restricts case 6 to that fiber.
pub fn gh_classify(
    ell_minus: u32,
    ell_plus: u32,
    h: u8,
    hint: Option<Case6Fiber>,
) -> Result<Vec<GhCaseResult>> {
    if ell_minus == 0 || ell_plus == 0 {
        return Err(Error::InvalidParams(
            "fiber dimensions must be positive".into(),
        ));
    }
    let mut out = Vec::new();
    match h {
        2 => {
            if ell_minus == 1 && ell_plus == 1 {
                out.push(case(1, "S^3 x S^3 x ΩS^7".into(), 7));
            }
        }
        1 => {
            let (circle, other) = if ell_plus == 1 {
                (ell_plus, ell_minus)
            } else {
                (ell_minus, ell_plus)
            };
            if circle == 1 && other == 1 {
                out.push(case(2, "S^3 x ΩS^5".into(), 5));
            } else if circle == 1 && other >= 3 && other % 2 == 1 {
                out.push(case(
                    3,
                    format!("S^{other} x ΩS^{}", 2 * other + 3),
                    2 * other + 3,
                ));
            }
        }
        0 => {
            let (a, b) = (ell_minus, ell_plus);
            let n = if a % 2 == b % 2 {
                a + b + 1
            } else {
                2 * (a + b) + 1
            };
            let model = if a % 2 == b % 2 {
                format!("S^{a} x S^{b} x ΩS^{n}")
            } else {
                format!("S^{a} x S^{b} x S^{} x ΩS^{n}", a + b)
            };
            out.push(case(4, model, n));
            if a == b && a % 2 == 0 {
                out.push(case(5, format!("S^{a} x ΩS^{}", a + 1), a + 1));
            }
            if a == b {
                for f in Case6Fiber::ALL {
                    if f.ell() == a && hint.is_none_or(|hf| hf == f) {
                        out.push(GhCaseResult {
                            case_index: 6,
                            fiber_model: format!("{} x ΩS^{}", f.label(), f.loop_sphere()),
                            forced_dim: f.loop_sphere(),
                            fiber: Some(f),
                        });
                    }
                }
            }
        }
        _ => return Err(Error::InvalidParams(format!("h = {h}, expected 0, 1 or 2"))),
    }
    if out.is_empty() {
        return Err(Error::NoCompatibleCase(format!(
            "ℓ₋ = {ell_minus}, ℓ₊ = {ell_plus}, h = {h}"
        )));
    }
    Ok(out)
}
