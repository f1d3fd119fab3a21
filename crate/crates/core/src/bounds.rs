//! Exact evaluation of the bound formulas.
//!
//! Values of the form `c · 4^e` with rational `c` and `e` are kept as
//! [`ScaledPower`]s and compared exactly by clearing the exponent's
//! denominator, so `4^(28/3)` never passes through floating point.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Ratio};
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("exponent m - n + c = {0} is negative")]
    NegativeExponent(i128),
    #[error("{0}")]
    InvalidParameter(&'static str),
}

/// `coefficient · 4^exponent` with positive rational coefficient.
#[derive(Debug, Clone)]
pub struct ScaledPower {
    coefficient: BigRational,
    exponent: BigRational,
}

fn rational(num: i64, den: i64) -> BigRational {
    Ratio::new(BigInt::from(num), BigInt::from(den))
}

impl ScaledPower {
    /// # Panics
    /// If `coefficient <= 0`.
    pub fn new(coefficient: BigRational, exponent: BigRational) -> Self {
        assert!(coefficient.is_positive(), "coefficient must be positive");
        Self {
            coefficient,
            exponent,
        }
    }

    pub fn from_integer(value: u64) -> Self {
        Self::new(rational(value as i64, 1), BigRational::zero())
    }

    /// `4^exponent`.
    pub fn power_of_four(exponent: BigRational) -> Self {
        Self::new(BigRational::one(), exponent)
    }

    pub fn coefficient(&self) -> &BigRational {
        &self.coefficient
    }

    pub fn exponent(&self) -> &BigRational {
        &self.exponent
    }

    pub fn mul(&self, other: &ScaledPower) -> ScaledPower {
        ScaledPower::new(
            &self.coefficient * &other.coefficient,
            &self.exponent + &other.exponent,
        )
    }

    pub fn scale(&self, factor: &BigRational) -> ScaledPower {
        ScaledPower::new(&self.coefficient * factor, self.exponent.clone())
    }

    /// Approximate value; may overflow to infinity.
    pub fn to_f64(&self) -> f64 {
        let c = self.coefficient.to_f64().unwrap_or(f64::INFINITY);
        let e = self.exponent.to_f64().unwrap_or(f64::INFINITY);
        c * 4f64.powf(e)
    }
}

impl PartialEq for ScaledPower {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ScaledPower {}

impl PartialOrd for ScaledPower {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ScaledPower {
    /// `a·4^p` vs `b·4^q`: with `q - p = r/s`, `s > 0`, compare
    /// `(a/b)^s` against `4^r`, both sides as big integers.
    fn cmp(&self, other: &Self) -> Ordering {
        let ratio = &self.coefficient / &other.coefficient;
        let diff = &other.exponent - &self.exponent;
        let s = diff.denom().to_u32().expect("exponent denominator fits in u32");
        let r = diff.numer().clone();
        let num = Pow::pow(ratio.numer().magnitude().clone(), s);
        let den = Pow::pow(ratio.denom().magnitude().clone(), s);
        let shift = r.magnitude().to_u64().expect("exponent numerator fits in u64") * 2;
        let four_r = BigUint::one() << shift;
        if r.is_negative() {
            // (x/y)^s vs 4^-|r|  <=>  x^s · 4^|r| vs y^s
            (num * four_r).cmp(&den)
        } else {
            num.cmp(&(den * four_r))
        }
    }
}

impl fmt::Display for ScaledPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * 4^({})", self.coefficient, self.exponent)
    }
}

/// `4^(m - n + c) · (n - 1) + 1`, the dichromatic bound forcing a subdivision
/// of a digraph with `n` vertices, `m` arcs and `c` components.
pub fn mader_bound_general(n: u64, m: u64, c: u64) -> Result<BigUint, BoundError> {
    if n == 0 {
        return Err(BoundError::InvalidParameter("n >= 1"));
    }
    let exp = m as i128 - n as i128 + c as i128;
    if exp < 0 {
        return Err(BoundError::NegativeExponent(exp));
    }
    Ok((BigUint::one() << (2 * exp as u64)) * BigUint::from(n - 1) + BigUint::one())
}

/// `(4^(m+1) · n - 1) / 3` as an exact rational.
pub fn subdivision_bound(n: u64, m: u64) -> Result<BigRational, BoundError> {
    if n == 0 {
        return Err(BoundError::InvalidParameter("n >= 1"));
    }
    let top = (BigInt::one() << (2 * (m + 1))) * BigInt::from(n) - BigInt::one();
    Ok(Ratio::new(top, BigInt::from(3)))
}

/// `g(x) = 4^(2x²/3 + 2x - 8/3)` at rational `x`.
pub fn g_bound(x: &BigRational) -> ScaledPower {
    let e = rational(2, 3) * x * x + rational(2, 1) * x - rational(8, 3);
    ScaledPower::power_of_four(e)
}

/// Values of the recurrence bounding `mader(bid K_n)`:
/// `F(1) = 1`; for even `n`, `F(n) = 4^(n²/2) · 2 · F(n/2)`; for odd `n`,
/// `F(n) = 4^(2n-1) · F(n-1)`. Index `i` holds `F(i + 1)`.
pub fn kn_recurrence(n_max: u64) -> Vec<ScaledPower> {
    let mut values: Vec<ScaledPower> = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let value = if n == 1 {
            ScaledPower::from_integer(1)
        } else if n % 2 == 0 {
            let half = &values[(n / 2 - 1) as usize];
            ScaledPower::power_of_four(rational((n * n) as i64, 2))
                .scale(&rational(2, 1))
                .mul(half)
        } else {
            ScaledPower::power_of_four(rational((2 * n - 1) as i64, 1)).mul(&values[(n - 2) as usize])
        };
        values.push(value);
    }
    values
}

/// One row of [`kn_bound_check`].
#[derive(Debug, Clone)]
pub struct KnBoundRow {
    pub n: u64,
    pub recurrence: ScaledPower,
    pub g: ScaledPower,
    /// `4^(n²/2 + n) · g(n/2) == g(n)`, the identity closing both cases.
    pub closing_identity: bool,
}

impl KnBoundRow {
    pub fn holds(&self) -> bool {
        self.recurrence <= self.g && self.closing_identity
    }
}

/// Checks `F(n) <= g(n)` exactly for all `1 <= n <= n_max`.
pub fn kn_bound_rows(n_max: u64) -> Vec<KnBoundRow> {
    kn_recurrence(n_max)
        .into_iter()
        .zip(1..)
        .map(|(recurrence, n)| {
            let x = rational(n as i64, 1);
            let g = g_bound(&x);
            let half = g_bound(&rational(n as i64, 2));
            let lifted = ScaledPower::power_of_four(rational((n * n) as i64, 2) + x).mul(&half);
            KnBoundRow {
                n,
                closing_identity: lifted == g,
                recurrence,
                g,
            }
        })
        .collect()
}

/// Whether every row up to `n_max` holds.
pub fn kn_bound_check(n_max: u64) -> bool {
    kn_bound_rows(n_max).iter().all(KnBoundRow::holds)
}

/// Digirth that forces a subdivision of `C(k, k)` when `δ⁺ >= 2`: `8k - 6`.
pub fn spindle_digirth_threshold(k: usize) -> usize {
    8 * k - 6
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mader_general_values() {
        assert_eq!(mader_bound_general(1, 0, 1).unwrap(), BigUint::from(1u32));
        assert_eq!(mader_bound_general(3, 3, 1).unwrap(), BigUint::from(9u32));
        assert_eq!(mader_bound_general(2, 2, 1).unwrap(), BigUint::from(5u32));
        assert_eq!(mader_bound_general(4, 1, 1), Err(BoundError::NegativeExponent(-2)));
    }

    #[test]
    fn subdivision_values() {
        assert_eq!(subdivision_bound(1, 0).unwrap(), rational(1, 1));
        assert_eq!(subdivision_bound(2, 1).unwrap(), rational(31, 3));
        assert_eq!(subdivision_bound(3, 3).unwrap(), rational(767, 3));
    }

    #[test]
    fn first_recurrence_values() {
        let rows = kn_bound_rows(3);
        // F(1) = 1 = g(1)
        assert_eq!(rows[0].recurrence, ScaledPower::from_integer(1));
        assert_eq!(rows[0].g, ScaledPower::from_integer(1));
        // F(2) = 4^2 * 2 * 1 = 32; g(2) = 4^(8/3 + 4 - 8/3) = 256
        assert_eq!(rows[1].recurrence, ScaledPower::from_integer(32));
        assert_eq!(rows[1].g, ScaledPower::from_integer(256));
        // F(3) = 4^5 * 32 = 32768; g(3) = 4^(28/3)
        assert_eq!(rows[2].recurrence, ScaledPower::from_integer(32768));
        assert!(rows.iter().all(KnBoundRow::holds));
    }

    #[test]
    fn fractional_comparison() {
        // 4^(1/2) = 2
        let two = ScaledPower::power_of_four(rational(1, 2));
        assert_eq!(two, ScaledPower::from_integer(2));
        // 4^(28/3) lies strictly between 4^9 and 4^10
        let g3 = ScaledPower::power_of_four(rational(28, 3));
        assert!(g3 > ScaledPower::power_of_four(rational(9, 1)));
        assert!(g3 < ScaledPower::power_of_four(rational(10, 1)));
        let quarter = ScaledPower::new(rational(1, 4), rational(0, 1));
        assert!(quarter < ScaledPower::from_integer(1));
        assert_eq!(quarter, ScaledPower::power_of_four(rational(-1, 1)));
    }

    #[test]
    fn whole_range() {
        assert!(kn_bound_check(64));
    }
}
