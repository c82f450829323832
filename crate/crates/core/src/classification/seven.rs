//! The four-parameter family of 7-manifolds with an `S^3 x S^3` action.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SevenFamilyParams {
    pub p_minus: i64,
    pub q_minus: i64,
    pub p_plus: i64,
    pub q_plus: i64,
}

fn one_mod_four(x: i64) -> bool {
    x.rem_euclid(4) == 1
}

impl SevenFamilyParams {
    /// All four parameters must be `1 mod 4`.
    pub fn new(p_minus: i64, q_minus: i64, p_plus: i64, q_plus: i64) -> Result<Self> {
        let p = SevenFamilyParams {
            p_minus,
            q_minus,
            p_plus,
            q_plus,
        };
        p.check()?;
        Ok(p)
    }

    fn check(&self) -> Result<()> {
        let all = [self.p_minus, self.q_minus, self.p_plus, self.q_plus];
        if let Some(bad) = all.iter().find(|&&x| !one_mod_four(x)) {
            return Err(Error::InvalidParams(format!(
                "{bad} is not congruent to 1 mod 4 in {all:?}"
            )));
        }
        Ok(())
    }

    /// `p₋² q₊² - p₊² q₋²`, before the absolute value and division.
    pub fn raw_difference(&self) -> i128 {
        let sq = |x: i64| i128::from(x) * i128::from(x);
        sq(self.p_minus) * sq(self.q_plus) - sq(self.p_plus) * sq(self.q_minus)
    }
}

/// `r = |p₋² q₊² - p₊² q₋²| / 8`, the order of `H^4(M; Z)` (or 0 when `M`
/// is not a rational sphere).
pub fn seven_family_torsion(p: &SevenFamilyParams) -> Result<u128> {
    p.check()?;
    let diff = p.raw_difference().unsigned_abs();
    if !diff.is_multiple_of(8) {
        return Err(Error::Internal(format!(
            "{diff} is not divisible by 8 for {p:?}"
        )));
    }
    Ok(diff / 8)
}

/// Parameters with `r = t`: `q± = 1` and `p± = ±(2t ± 1)` with the sign
/// making each `1 mod 4`.
pub fn realize_torsion(t: u64) -> Result<SevenFamilyParams> {
    if t == 0 {
        return Err(Error::InvalidParams("t must be positive".into()));
    }
    let t = i64::try_from(t)
        .ok()
        .filter(|&t| t < i64::MAX / 4)
        .ok_or_else(|| Error::InvalidParams(format!("t = {t} is too large")))?;
    let signed = |x: i64| if one_mod_four(x) { x } else { -x };
    SevenFamilyParams::new(signed(2 * t - 1), 1, signed(2 * t + 1), 1)
}
