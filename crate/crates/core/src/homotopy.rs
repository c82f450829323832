//! Rational homotopy and rational cohomology of homogeneous spaces `G/H`.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{multiplicities, GroupType, NamedEmbedding};
use crate::polynomial::IntegerPolynomial;

/// `ambient / inclusion.subgroup`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomogeneousSpaceModel {
    pub ambient: GroupType,
    pub inclusion: NamedEmbedding,
}

impl HomogeneousSpaceModel {
    pub fn new(inclusion: NamedEmbedding) -> Self {
        HomogeneousSpaceModel {
            ambient: inclusion.ambient.clone(),
            inclusion,
        }
    }

    pub fn with_ambient(ambient: GroupType, inclusion: NamedEmbedding) -> Result<Self> {
        if inclusion.ambient != ambient {
            return Err(Error::embedding(
                &inclusion.id,
                format!("embedding lands in {}, not {ambient}", inclusion.ambient),
            ));
        }
        Ok(HomogeneousSpaceModel { ambient, inclusion })
    }

    pub fn subgroup(&self) -> &GroupType {
        &self.inclusion.subgroup
    }

    pub fn dimension(&self) -> u32 {
        self.ambient.dimension() - self.subgroup().dimension()
    }

    pub fn is_equal_rank(&self) -> bool {
        self.ambient.rank() == self.subgroup().rank()
    }
}

/// Degrees of the rational homotopy generators of `G/H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientHomotopy {
    pub odd_degrees: Vec<u32>,
    pub even_degrees: Vec<u32>,
    /// Set when some map rank was not declared and the generic rank was used.
    pub heuristic: bool,
}

impl QuotientHomotopy {
    /// `sum(odd) - sum(even - 1)`, which equals `dim G/H`.
    pub fn elliptic_dimension(&self) -> i64 {
        let odd: i64 = self.odd_degrees.iter().map(|&d| d as i64).sum();
        let even: i64 = self.even_degrees.iter().map(|&d| d as i64 - 1).sum();
        odd - even
    }
}

/// Long exact sequence bookkeeping: in degree `k`, `c_G(k) - r(k)` generators
/// survive in `G/H` and `c_H(k) - r(k)` kernel generators reappear one degree
/// higher.
pub fn quotient_homotopy(space: &HomogeneousSpaceModel) -> Result<QuotientHomotopy> {
    let emb = &space.inclusion;
    emb.check_rank_bounds()?;
    let cl = multiplicities(&space.subgroup().degrees());
    let cg = multiplicities(&space.ambient.degrees());
    let mut degrees: Vec<u32> = cl.keys().chain(cg.keys()).copied().collect();
    degrees.sort_unstable();
    degrees.dedup();

    let mut odd = Vec::new();
    let mut even = Vec::new();
    let mut heuristic = false;
    for k in degrees {
        let l = cl.get(&k).copied().unwrap_or(0);
        let g = cg.get(&k).copied().unwrap_or(0);
        let r = match emb.declared_rank(k) {
            Some(r) => r,
            None => {
                heuristic = true;
                l.min(g)
            }
        };
        let (same, shifted) = if k % 2 == 1 {
            (&mut odd, &mut even)
        } else {
            (&mut even, &mut odd)
        };
        same.extend(std::iter::repeat_n(k, (g - r) as usize));
        shifted.extend(std::iter::repeat_n(k + 1, (l - r) as usize));
    }
    odd.sort_unstable();
    even.sort_unstable();
    Ok(QuotientHomotopy {
        odd_degrees: odd,
        even_degrees: even,
        heuristic,
    })
}

fn invariant_product(degrees: &[u32]) -> IntegerPolynomial {
    degrees.iter().fold(IntegerPolynomial::one(), |acc, &d| {
        &acc * &IntegerPolynomial::binomial(-1, d as usize + 1)
    })
}

/// Poincaré polynomial of an equal-rank `G/H`:
/// `prod_G (1 - t^(d+1)) / prod_H (1 - t^(e+1))`.
pub fn hilbert_series(space: &HomogeneousSpaceModel) -> Result<IntegerPolynomial> {
    if !space.is_equal_rank() {
        return Err(Error::Unsupported(format!(
            "{} / {} is not an equal-rank pair",
            space.ambient,
            space.subgroup()
        )));
    }
    let num = invariant_product(&space.ambient.degrees());
    let den = invariant_product(&space.subgroup().degrees());
    let id = &space.inclusion.id;
    let q = num
        .exact_div(&den)
        .ok_or_else(|| Error::embedding(id, "invariant quotient is not a polynomial"))?;
    if !q.has_nonnegative_coefficients() || q.coeff(0) != 1 {
        return Err(Error::embedding(
            id,
            format!("invariant quotient {q} is not a Poincaré series"),
        ));
    }
    Ok(q)
}

/// Weyl-order ratio for equal rank, zero otherwise.
pub fn euler_characteristic(space: &HomogeneousSpaceModel) -> Result<BigUint> {
    if !space.is_equal_rank() {
        return Ok(BigUint::zero());
    }
    let wg = space.ambient.weyl_order();
    let wh = space.subgroup().weyl_order();
    if !(&wg % &wh).is_zero() {
        return Err(Error::embedding(
            &space.inclusion.id,
            format!("Weyl order {wh} does not divide {wg}"),
        ));
    }
    Ok(wg / wh)
}

/// `prod (1 + t^d)`: Poincaré polynomial of a product of spheres.
pub fn odd_product_poincare(dims: &[u32]) -> IntegerPolynomial {
    dims.iter().fold(IntegerPolynomial::one(), |acc, &d| {
        &acc * &IntegerPolynomial::binomial(1, d as usize)
    })
}

/// Poincaré polynomial whenever it follows from the degree data alone: the
/// equal-rank case, or a declared map leaving no even homotopy (then `G/H` is
/// rationally a product of odd spheres).
pub fn computable_poincare(space: &HomogeneousSpaceModel) -> Result<Option<IntegerPolynomial>> {
    if space.is_equal_rank() {
        return hilbert_series(space).map(Some);
    }
    let q = quotient_homotopy(space)?;
    if q.even_degrees.is_empty() && !q.heuristic {
        return Ok(Some(odd_product_poincare(&q.odd_degrees)));
    }
    Ok(None)
}
