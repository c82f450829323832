use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Polynomial in `t` with `i64` coefficients, indexed by degree and kept with
/// trailing zeros trimmed. Arithmetic is exact and panics on `i64` overflow.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct IntegerPolynomial {
    coeffs: Vec<i64>,
}

impl From<Vec<i64>> for IntegerPolynomial {
    fn from(v: Vec<i64>) -> Self {
        IntegerPolynomial::new(v)
    }
}

impl From<IntegerPolynomial> for Vec<i64> {
    fn from(p: IntegerPolynomial) -> Self {
        p.coeffs
    }
}

const OVERFLOW: &str = "integer polynomial coefficient overflow";

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntegerPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntegerPolynomial::default()
    }

    pub fn one() -> Self {
        IntegerPolynomial { coeffs: vec![1] }
    }

    /// `c * t^degree`.
    pub fn monomial(c: i64, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        IntegerPolynomial::new(coeffs)
    }

    /// `1 + sign * t^degree`.
    pub fn binomial(sign: i64, degree: usize) -> Self {
        &IntegerPolynomial::one() + &IntegerPolynomial::monomial(sign, degree)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero past the end).
    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0i64, |acc, &c| {
            acc.checked_mul(x)
                .and_then(|v| v.checked_add(c))
                .expect(OVERFLOW)
        })
    }

    /// Long division by a divisor with leading coefficient `±1`. Returns
    /// `None` for other divisors (including zero).
    pub fn div_rem(
        &self,
        divisor: &IntegerPolynomial,
    ) -> Option<(IntegerPolynomial, IntegerPolynomial)> {
        let lead = divisor.leading();
        if lead != 1 && lead != -1 {
            return None;
        }
        let dd = divisor.degree()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((IntegerPolynomial::zero(), self.clone()));
        }
        let mut quot = vec![0i64; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd] * lead;
            quot[i] = c;
            if c != 0 {
                for (j, &dc) in divisor.coeffs.iter().enumerate() {
                    let sub = c.checked_mul(dc).expect(OVERFLOW);
                    rem[i + j] = rem[i + j].checked_sub(sub).expect(OVERFLOW);
                }
            }
        }
        Some((IntegerPolynomial::new(quot), IntegerPolynomial::new(rem)))
    }

    /// Quotient if `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &IntegerPolynomial) -> Option<IntegerPolynomial> {
        match self.div_rem(divisor) {
            Some((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }
}

impl Add for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn add(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntegerPolynomial::new(
            (0..n)
                .map(|k| self.coeff(k).checked_add(rhs.coeff(k)).expect(OVERFLOW))
                .collect(),
        )
    }
}

impl Neg for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn neg(self) -> IntegerPolynomial {
        IntegerPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn sub(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn mul(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntegerPolynomial::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let p = a.checked_mul(b).expect(OVERFLOW);
                out[i + j] = out[i + j].checked_add(p).expect(OVERFLOW);
            }
        }
        IntegerPolynomial::new(out)
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{k}")?,
                _ => write!(f, "{a}t^{k}")?,
            }
        }
        Ok(())
    }
}
