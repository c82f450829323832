//! Rational Mayer–Vietoris bookkeeping for `M = D(G/K⁻) ∪ D(G/K⁺)`.

use serde::Serialize;

use crate::polynomial::IntegerPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Feasible,
    Infeasible,
}

/// Ranks in degree `k` of `H^k(M) -> H^k(K⁺) ⊕ H^k(K⁻)` (`r`),
/// `H^k(K⁺) ⊕ H^k(K⁻) -> H^k(H)` (`s`) and the connecting map `δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankTriple {
    pub degree: u32,
    pub r: i64,
    pub s: i64,
    pub delta: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MvFeasibility {
    pub verdict: Verdict,
    pub failing_degree: Option<u32>,
    pub rank_profile: Vec<RankTriple>,
}

impl MvFeasibility {
    pub fn is_feasible(&self) -> bool {
        self.verdict == Verdict::Feasible
    }
}

/// Solve the exactness equations degree by degree for a rational `n`-sphere:
/// `b_k(M) = δ_{k-1} + r_k`, `b_k(K⁺) + b_k(K⁻) = r_k + s_k`,
/// `b_k(H) = s_k + δ_k`. The first negative rank (or a nonzero connecting
/// map past the top degree) makes the data infeasible.
pub fn mv_feasible(
    p_h: &IntegerPolynomial,
    p_k_plus: &IntegerPolynomial,
    p_k_minus: &IntegerPolynomial,
    n: u32,
) -> MvFeasibility {
    let top = [p_h, p_k_plus, p_k_minus]
        .iter()
        .filter_map(|p| p.degree())
        .max()
        .unwrap_or(0)
        .max(n as usize)
        + 1;
    let mut profile = Vec::with_capacity(top + 1);
    let mut prev_delta = 0i64;
    for k in 0..=top {
        let b_m = i64::from(k == 0) + i64::from(k == n as usize);
        let r = b_m - prev_delta;
        let s = p_k_plus.coeff(k) + p_k_minus.coeff(k) - r;
        let delta = p_h.coeff(k) - s;
        let triple = RankTriple {
            degree: k as u32,
            r,
            s,
            delta,
        };
        profile.push(triple);
        if r < 0 || s < 0 || delta < 0 || (k == top && delta != 0) {
            return MvFeasibility {
                verdict: Verdict::Infeasible,
                failing_degree: Some(k as u32),
                rank_profile: profile,
            };
        }
        prev_delta = delta;
    }
    MvFeasibility {
        verdict: Verdict::Feasible,
        failing_degree: None,
        rank_profile: profile,
    }
}

/// `sum (-1)^k (b_k(K⁺) + b_k(K⁻) - b_k(H))`, which is `χ(M)` when the
/// sequence is exact.
pub fn alternating_sum(
    p_h: &IntegerPolynomial,
    p_k_plus: &IntegerPolynomial,
    p_k_minus: &IntegerPolynomial,
) -> i64 {
    (&(p_k_plus + p_k_minus) - p_h).eval(-1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::new(v.to_vec())
    }

    fn sphere_euler(n: u32) -> i64 {
        1 + if n.is_multiple_of(2) { 1 } else { -1 }
    }

    #[test]
    fn product_of_three_spheres() {
        let h = p(&[1, 0, 0, 2, 0, 0, 1]);
        let k = p(&[1, 0, 0, 1]);
        let res = mv_feasible(&h, &k, &k, 7);
        assert!(res.is_feasible());
        assert_eq!(alternating_sum(&h, &k, &k), sphere_euler(7));
    }

    #[test]
    fn counterexample_fails_in_degree_two() {
        let k = p(&[1, 0, 1]);
        let res = mv_feasible(&p(&[1, 0, 0, 1]), &k, &k, 5);
        assert_eq!(res.verdict, Verdict::Infeasible);
        assert_eq!(res.failing_degree, Some(2));
        assert_eq!(res.rank_profile.last().unwrap().delta, -2);
    }

    #[test]
    fn suspension_pattern() {
        for n in [3u32, 5, 9] {
            let h = IntegerPolynomial::binomial(1, n as usize - 1);
            let res = mv_feasible(&h, &IntegerPolynomial::one(), &IntegerPolynomial::one(), n);
            assert!(res.is_feasible(), "n = {n}");
        }
    }

    #[test]
    fn connecting_map_must_close() {
        // H carries a class in degree 4 nobody can absorb below n = 9.
        let res = mv_feasible(&p(&[1, 0, 0, 0, 1]), &p(&[1]), &p(&[0]), 9);
        assert_eq!(res.verdict, Verdict::Infeasible);
    }

    proptest! {
        #[test]
        fn feasible_profiles_are_exact(
            h in proptest::collection::vec(0i64..3, 1..8),
            kp in proptest::collection::vec(0i64..3, 1..8),
            km in proptest::collection::vec(0i64..3, 1..8),
            n in 1u32..12,
        ) {
            let (h, kp, km) = (p(&h), p(&kp), p(&km));
            let res = mv_feasible(&h, &kp, &km, n);
            if res.is_feasible() {
                for t in &res.rank_profile {
                    let k = t.degree as usize;
                    prop_assert_eq!(kp.coeff(k) + km.coeff(k), t.r + t.s);
                    prop_assert_eq!(h.coeff(k), t.s + t.delta);
                }
                prop_assert_eq!(alternating_sum(&h, &kp, &km), sphere_euler(n));
            }
        }
    }
}
